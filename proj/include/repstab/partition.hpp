#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace repstab {

/// Weakly decreasing sequence of positive integers; {} is the empty partition.
/// Immutable after construction.
class Partition {
public:
    Partition() = default;
    /// Strips trailing zeros; throws std::invalid_argument if the remaining
    /// entries are not weakly decreasing positive integers.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    int size() const { return size_; }                    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Row length, 0-indexed; 0 beyond the last row.
    int row(int i) const {
        return (0 <= i && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    std::span<const int> parts() const { return parts_; }

    Partition conjugate() const;
    /// true iff inner fits inside this diagram row by row.
    bool contains(const Partition& inner) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Successful border-strip removal: the strip had strip_length boxes and
/// occupied `columns` distinct columns.
struct StripRemoval {
    Partition remainder;
    int columns = 0;
    int strip_length = 0;
};
struct EmptyStrip {};  // requested length 0
struct NoStrip {};     // the rim walk runs off the diagram
struct NotYoung {};    // removal would leave a non-partition
using StripResult = std::variant<StripRemoval, EmptyStrip, NoStrip, NotYoung>;

/// Removes the unique connected border strip of `len` boxes that contains the
/// first box of the last row, climbing northeast along the rim.
StripResult remove_border_strip(const Partition& p, int len);

/// Box coordinates (row, col), 1-indexed, of that strip; empty when the strip
/// does not exist. Exposed for property tests and trace output.
std::vector<std::pair<int, int>> border_strip_boxes(const Partition& p, int len);

/// All partitions of exactly n, lexicographically decreasing. Memoized.
const std::vector<Partition>& partitions_of(int n);

/// All partitions of size <= max_size, ordered by size then lex decreasing.
std::vector<Partition> partitions_up_to(int max_size);

/// All partitions of size <= max_size all of whose column lengths are even,
/// i.e. conjugates of 2*delta over |delta| <= max_size/2. Same ordering.
std::vector<Partition> even_column_partitions(int max_size);

std::string format_partition(const Partition& p);    // "[4,3,2,2]", "[]"
Partition parse_partition(std::string_view text);    // throws std::invalid_argument

}  // namespace repstab
