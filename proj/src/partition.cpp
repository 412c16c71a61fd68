#include "repstab/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace repstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition entries must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.row(i) > row(i)) return false;
    return true;
}

namespace {

// The rim walk: the strip containing (l,1) has exactly one box per diagonal
// d = j - i, for d = 1-l .. len-l, each the last box of p on that diagonal.
std::vector<std::pair<int, int>> rim_walk(const Partition& p, int len) {
    std::vector<std::pair<int, int>> boxes;
    const int ell = p.length();
    if (ell == 0 || len <= 0) return boxes;
    for (int t = 0; t < len; ++t) {
        const int d = (1 - ell) + t;
        std::pair<int, int> best{0, 0};
        for (int i = std::max(1, 1 - d); i <= ell; ++i) {
            const int j = i + d;
            if (j >= 1 && j <= p.row(i - 1)) best = {i, j};
        }
        if (best.first == 0) return {};  // walked off the rim: no strip
        boxes.push_back(best);
    }
    return boxes;
}

}  // namespace

std::vector<std::pair<int, int>> border_strip_boxes(const Partition& p, int len) {
    return rim_walk(p, len);
}

StripResult remove_border_strip(const Partition& p, int len) {
    if (len == 0) return EmptyStrip{};
    auto boxes = rim_walk(p, len);
    if (boxes.empty()) return NoStrip{};

    std::vector<int> rem(p.parts().begin(), p.parts().end());
    std::map<int, std::vector<int>> by_row;
    for (auto [i, j] : boxes) by_row[i].push_back(j);
    for (auto& [i, js] : by_row) {
        std::sort(js.begin(), js.end());
        // strip boxes must be the rightmost boxes of their row
        const int row_len = p.row(i - 1);
        for (size_t t = 0; t < js.size(); ++t)
            if (js[t] != row_len - static_cast<int>(js.size()) + 1 + static_cast<int>(t))
                return NotYoung{};
        rem[static_cast<size_t>(i - 1)] -= static_cast<int>(js.size());
    }
    for (size_t i = 0; i + 1 < rem.size(); ++i)
        if (rem[i] < rem[i + 1]) return NotYoung{};

    int cols = 0;
    {
        std::vector<int> seen;
        for (auto [i, j] : boxes) seen.push_back(j);
        std::sort(seen.begin(), seen.end());
        cols = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }
    return StripRemoval{Partition(std::move(rem)), cols, len};
}

namespace {

void gen_rec(int rem, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (rem == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_rec(rem - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mx;
    static std::map<int, std::vector<Partition>> table;  // node stability matters
    std::lock_guard lock(mx);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back({});
    } else if (n > 0) {
        std::vector<int> cur;
        gen_rec(n, n, cur, out);  // emits lex decreasing by construction
    }
    return table.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s)
        for (const auto& p : partitions_of(s)) out.push_back(p);
    return out;
}

std::vector<Partition> even_column_partitions(int max_size) {
    static std::mutex mx;
    static std::map<int, std::vector<Partition>> table;
    {
        std::lock_guard lock(mx);
        auto it = table.find(max_size);
        if (it != table.end()) return it->second;
    }
    std::vector<Partition> out;
    for (const auto& delta : partitions_up_to(max_size / 2)) {
        std::vector<int> doubled;
        for (int p : delta.parts()) doubled.push_back(2 * p);
        out.push_back(Partition(doubled).conjugate());
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;  // lex decreasing within a size
    });
    std::lock_guard lock(mx);
    return table.emplace(max_size, out).first->second;
}

std::string format_partition(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.row(i));
    }
    return s + "]";
}

Partition parse_partition(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos || text[b] != '[' || text[e] != ']')
        throw std::invalid_argument("partition must look like [4,3,2,2] or []");
    std::string_view body = text.substr(b + 1, e - b - 1);
    std::vector<int> parts;
    if (body.find_first_not_of(" \t") == std::string_view::npos) return {};
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        size_t tb = tok.find_first_not_of(" \t");
        size_t te = tok.find_last_not_of(" \t");
        if (tb == std::string_view::npos)
            throw std::invalid_argument("empty entry in partition");
        tok = tok.substr(tb, te - tb + 1);
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("partition entries must be nonnegative integers");
            if (v > 100000000) throw std::invalid_argument("partition entry out of range");
            v = v * 10 + (c - '0');
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size()) throw std::invalid_argument("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

}  // namespace repstab
