#include "repstab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "repstab/branching.hpp"
#include "repstab/lr.hpp"
#include "repstab/stability.hpp"

namespace repstab {

namespace {

using nlohmann::json;

enum class Format { Text, JsonLines };

GroupKind parse_group(const std::string& g) {
    if (g == "gl") return GroupKind::GL;
    if (g == "sp") return GroupKind::Sp;
    throw std::invalid_argument("--group must be gl or sp");
}

std::vector<std::pair<AnyLabel, long long>> sorted_terms(const std::map<AnyLabel, long long>& terms) {
    std::vector<std::pair<AnyLabel, long long>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return output_order(a.first, b.first); });
    return v;
}

void emit_terms(std::ostream& out, const std::map<AnyLabel, long long>& terms, Format fmt,
                const char* prefix = nullptr, const int* n = nullptr) {
    for (const auto& [label, coeff] : sorted_terms(terms)) {
        if (fmt == Format::Text) {
            if (prefix) out << prefix << ' ';
            if (n) out << *n << ' ';
            out << format_label(label) << ' ' << coeff << '\n';
        } else {
            json rec{{"label", format_label(label)},
                     {"sign", coeff < 0 ? -1 : 1},
                     {"multiplicity", coeff < 0 ? -coeff : coeff}};
            if (n) rec["n"] = *n;
            if (prefix) rec["kind"] = prefix;
            out << rec.dump() << '\n';
        }
    }
}

void emit_pairs(std::ostream& out, const PairDecomp& pd, Format fmt) {
    std::vector<std::pair<std::pair<AnyLabel, AnyLabel>, long long>> v(pd.terms.begin(),
                                                                       pd.terms.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return output_order(a.first.first, b.first.first);
        return output_order(a.first.second, b.first.second);
    });
    for (const auto& [pair, coeff] : v) {
        if (fmt == Format::Text) {
            out << format_label(pair.first) << " x " << format_label(pair.second) << ' ' << coeff
                << '\n';
        } else {
            out << json{{"label", format_label(pair.first)},
                        {"partner", format_label(pair.second)},
                        {"sign", coeff < 0 ? -1 : 1},
                        {"multiplicity", coeff < 0 ? -coeff : coeff}}
                       .dump()
                << '\n';
        }
    }
}

struct StabilityArgs {
    std::string seq;
    int wedge_k = 1;
    std::string group = "gl";
    int lie = 0;
    int from = 1;
    int to = -1;  // default: from + 6
};

SequenceSpec build_sequence(const StabilityArgs& a) {
    SequenceSpec spec = [&] {
        if (a.seq == "h1-ia") return SequenceSpec::h1_ia();
        if (a.seq == "h1-torelli") return SequenceSpec::h1_torelli();
        if (a.seq == "wedge-standard")
            return SequenceSpec::wedge_standard(parse_group(a.group), a.wedge_k);
        return parse_sequence_spec(a.seq);  // full grammar escape hatch
    }();
    if (a.lie > 0) spec = SequenceSpec::free_lie(a.lie, std::move(spec));
    return spec;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;

    CLI::App app{"calculus for rational representations of GL_n and Sp_2n"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "text | json-lines")->capture_default_str();
    std::string cache_path;
    app.add_option("--cache", cache_path, "LR coefficient cache file");

    std::string group = "gl";
    int rank = 0, split_at = 0, tau_a = 0, wedge_k = 0;
    bool trace = false;
    // scalar bindings: CLI11 would split a [..]-bracketed token bound to a
    // vector option on commas, which collides with the partition syntax
    std::string arg1, arg2, arg3;

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lam_{mu nu}");
    lr_cmd->add_option("lam", arg1)->required();
    lr_cmd->add_option("mu", arg2)->required();
    lr_cmd->add_option("nu", arg3)->required();

    auto* mod_cmd = app.add_subcommand("mod", "modification rule modGL_n / modSp_2n");
    mod_cmd->add_option("--group", group)->required();
    mod_cmd->add_option("--rank", rank)->required();
    mod_cmd->add_flag("--trace", trace, "print intermediate remainders");
    mod_cmd->add_option("label", arg1)->required();

    auto* restrict_cmd = app.add_subcommand("restrict", "one-step restriction");
    restrict_cmd->add_option("--group", group)->required();
    restrict_cmd->add_option("--rank", rank)->required();
    restrict_cmd->add_option("label", arg1)->required();

    auto* outer_cmd = app.add_subcommand("outer", "outer restriction to a block pair");
    outer_cmd->add_option("--group", group)->required();
    outer_cmd->add_option("--rank", rank)->required();
    outer_cmd->add_option("--at", split_at, "left block rank")->required();
    outer_cmd->add_option("label", arg1)->required();

    auto* tensor_cmd = app.add_subcommand("tensor", "inner tensor product");
    tensor_cmd->add_option("--group", group)->required();
    tensor_cmd->add_option("--rank", rank)->required();
    tensor_cmd->add_option("first", arg1)->required();
    tensor_cmd->add_option("second", arg2)->required();

    auto* wedge_cmd = app.add_subcommand("wedge", "exterior power (stable, or at --rank)");
    wedge_cmd->add_option("--group", group)->required();
    wedge_cmd->add_option("--k", wedge_k)->required();
    wedge_cmd->add_option("--rank", rank, "fixed rank instead of stable decomposition");
    wedge_cmd->add_option("label", arg1)->required();

    auto* tau_cmd = app.add_subcommand("tau", "tau_{n,a} of a single label");
    tau_cmd->add_option("--group", group)->required();
    tau_cmd->add_option("--rank", rank)->required();
    tau_cmd->add_option("--a", tau_a)->required();
    tau_cmd->add_option("label", arg1)->required();

    auto* dim_cmd = app.add_subcommand("dim", "dimension of an irreducible");
    dim_cmd->add_option("--group", group)->required();
    dim_cmd->add_option("--rank", rank)->required();
    dim_cmd->add_option("label", arg1)->required();

    StabilityArgs st;
    auto* stab_cmd = app.add_subcommand("stability", "generate a sequence and detect stability");
    stab_cmd->add_option("--seq", st.seq, "h1-ia | h1-torelli | wedge-standard | spec grammar")
        ->required();
    stab_cmd->add_option("--k", st.wedge_k, "wedge-standard degree");
    stab_cmd->add_option("--group", st.group, "group for wedge-standard");
    stab_cmd->add_option("--lie", st.lie, "apply free-Lie degree L on top");
    stab_cmd->add_option("--from", st.from)->required();
    stab_cmd->add_option("--to", st.to, "default: from + 6");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);  // prints the right (sub)command help
        return {0, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    }

    // env var wins over the flag
    if (const char* env = std::getenv("REPSTAB_CACHE")) cache_path = env;
    std::optional<LrCache> cache;
    struct CacheGuard {
        ~CacheGuard() { attach_lr_cache(nullptr); }
    } guard;
    if (!cache_path.empty()) {
        cache.emplace(cache_path);
        attach_lr_cache(&*cache);
    }

    const Format fmt = [&] {
        if (format_name == "text") return Format::Text;
        if (format_name == "json-lines") return Format::JsonLines;
        throw std::invalid_argument("--format must be text or json-lines");
    }();

    try {
        const GroupKind kind = parse_group(group);

        if (lr_cmd->parsed()) {
            const long long c = lr_coefficient(parse_partition(arg1),
                                               parse_partition(arg2),
                                               parse_partition(arg3));
            if (fmt == Format::Text)
                out << c << '\n';
            else
                out << json{{"coefficient", c}}.dump() << '\n';
        } else if (mod_cmd->parsed()) {
            const AnyLabel label = parse_label(kind, arg1);
            if (kind == GroupKind::GL) {
                std::vector<GlModStep> steps;
                const auto r = mod_gl(std::get<GlLabel>(label).plus, std::get<GlLabel>(label).minus,
                                      rank, trace ? &steps : nullptr);
                for (const auto& s : steps) {
                    if (fmt == Format::Text)
                        out << "trace: " << format_partition(s.plus_remainder) << '|'
                            << format_partition(s.minus_remainder) << '\n';
                    else
                        out << json{{"trace", format_partition(s.plus_remainder) + "|" +
                                                  format_partition(s.minus_remainder)}}
                                   .dump()
                            << '\n';
                }
                if (fmt == Format::Text) {
                    if (!r)
                        out << "0\n";
                    else
                        out << (r->sign < 0 ? "-1 * " : "+1 * ")
                            << format_group_label(AnyLabel{r->label}, rank) << '\n';
                } else {
                    if (!r)
                        out << json{{"label", nullptr}, {"sign", 0}, {"multiplicity", 0}}.dump()
                            << '\n';
                    else
                        out << json{{"label", format_label(AnyLabel{r->label})},
                                    {"sign", r->sign},
                                    {"multiplicity", 1}}
                                   .dump()
                            << '\n';
                }
            } else {
                std::vector<SpModStep> steps;
                const auto r =
                    mod_sp(std::get<SpLabel>(label).lam, rank, trace ? &steps : nullptr);
                for (const auto& s : steps) {
                    if (fmt == Format::Text)
                        out << "trace: " << format_partition(s.remainder) << '\n';
                    else
                        out << json{{"trace", format_partition(s.remainder)}}.dump() << '\n';
                }
                if (fmt == Format::Text) {
                    if (!r)
                        out << "0\n";
                    else
                        out << (r->sign < 0 ? "-1 * " : "+1 * ")
                            << format_group_label(AnyLabel{r->label}, rank) << '\n';
                } else {
                    if (!r)
                        out << json{{"label", nullptr}, {"sign", 0}, {"multiplicity", 0}}.dump()
                            << '\n';
                    else
                        out << json{{"label", format_label(AnyLabel{r->label})},
                                    {"sign", r->sign},
                                    {"multiplicity", 1}}
                                   .dump()
                            << '\n';
                }
            }
        } else if (restrict_cmd->parsed()) {
            const AnyLabel label = parse_label(kind, arg1);
            const VirtualDecomp d = kind == GroupKind::GL
                                        ? restrict_gl_one(std::get<GlLabel>(label), rank)
                                        : restrict_sp_one(std::get<SpLabel>(label), rank);
            emit_terms(out, d.terms, fmt);
        } else if (outer_cmd->parsed()) {
            if (split_at < 0 || split_at > rank)
                throw std::invalid_argument("--at must lie in [0, rank]");
            const AnyLabel label = parse_label(kind, arg1);
            const PairDecomp pd =
                kind == GroupKind::GL
                    ? outer_restrict_gl(std::get<GlLabel>(label), split_at, rank - split_at)
                    : outer_restrict_sp(std::get<SpLabel>(label), split_at, rank - split_at);
            emit_pairs(out, pd, fmt);
        } else if (tensor_cmd->parsed()) {
            const AnyLabel a = parse_label(kind, arg1);
            const AnyLabel b = parse_label(kind, arg2);
            const VirtualDecomp d =
                kind == GroupKind::GL
                    ? tensor_gl(std::get<GlLabel>(a), std::get<GlLabel>(b), rank)
                    : tensor_sp(std::get<SpLabel>(a), std::get<SpLabel>(b), rank);
            emit_terms(out, d.terms, fmt);
        } else if (wedge_cmd->parsed()) {
            const AnyLabel label = parse_label(kind, arg1);
            if (wedge_cmd->count("--rank")) {
                const SymLaurent base =
                    kind == GroupKind::GL ? gl_character(std::get<GlLabel>(label), rank)
                                          : sp_character(std::get<SpLabel>(label), rank);
                emit_terms(out, decompose(exterior_power(base, wedge_k), kind, rank).terms, fmt);
            } else {
                const WedgeStable ws = wedge_stable(label, wedge_k);
                if (fmt == Format::Text)
                    out << "onset " << ws.onset << '\n';
                else
                    out << json{{"onset", ws.onset}}.dump() << '\n';
                emit_terms(out, ws.stable, fmt);
            }
        } else if (tau_cmd->parsed()) {
            const AnyLabel label = parse_label(kind, arg1);
            if (!label_valid_at(label, rank))
                throw std::invalid_argument("label not valid at rank");
            VirtualDecomp d{kind, rank, {}};
            d.add(label, 1);
            emit_terms(out, tau(d, tau_a).terms, fmt);
        } else if (dim_cmd->parsed()) {
            const AnyLabel label = parse_label(kind, arg1);
            if (!label_valid_at(label, rank))
                throw std::invalid_argument("label not valid at rank");
            const long long d = label_dimension(label, rank);
            if (fmt == Format::Text)
                out << d << '\n';
            else
                out << json{{"dimension", d}}.dump() << '\n';
        } else if (stab_cmd->parsed()) {
            if (st.to < 0) st.to = st.from + 6;
            const SequenceSpec spec = build_sequence(st);
            const MultiplicityTable table = generate(spec, st.from, st.to);
            for (const auto& [n, row] : table.rows) {
                const int nn = n;
                emit_terms(out, row, fmt, fmt == Format::Text ? nullptr : "row", &nn);
            }
            const StabilityReport report = detect_stability(table);
            if (fmt == Format::Text) {
                if (report.onset)
                    out << "onset " << *report.onset << '\n';
                else
                    out << "onset none\n";
                out << "flag finite-window-evidence\n";
                out << "flag surjectivity-unchecked\n";
                for (const auto& [label, mult] : sorted_terms(report.stable))
                    out << "stable " << format_label(label) << ' ' << mult << '\n';
            } else {
                json rec{{"evidence", "finite-window"}, {"surjectivity", "unchecked"}};
                if (report.onset)
                    rec["onset"] = *report.onset;
                else
                    rec["onset"] = nullptr;
                json stable = json::array();
                for (const auto& [label, mult] : sorted_terms(report.stable))
                    stable.push_back({{"label", format_label(label)},
                                      {"sign", 1},
                                      {"multiplicity", mult}});
                rec["stable"] = stable;
                out << rec.dump() << '\n';
            }
        }
        if (cache) cache->flush();
    } catch (const EngineError& e) {
        err << "error: " << e.what() << '\n';
        return {1, out.str(), err.str()};
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return {1, out.str(), err.str()};
    }
    return {0, out.str(), err.str()};
}

}  // namespace repstab
