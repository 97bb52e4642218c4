#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace resmax {

/// Finite universe of elements indexed 0 .. size()-1.
class GroundSet {
public:
    explicit GroundSet(int size);

    int size() const { return size_; }

private:
    int size_;
};

/// An immutable subset of a ground set, stored as strictly increasing
/// element indices together with the parent universe size.
///
/// The canonical text form is "{0,3,7}" ("{}" for the empty set) and
/// parsing followed by re-emitting reproduces the input exactly.
class Subset {
public:
    /// Empty subset of a zero-sized universe; placeholder value only.
    Subset() = default;

    /// Builds a subset from member indices (any order, no duplicates).
    Subset(std::vector<int> members, int parent_size);

    static Subset empty(int parent_size);
    static Subset full(int parent_size);

    /// Parses the canonical form "{0,3,7}". Spaces around tokens are
    /// tolerated, but members must be strictly increasing. Throws
    /// ParseError on bad syntax and InvalidInputError on out-of-range
    /// elements.
    static Subset parse(const std::string& text, int parent_size);

    std::string to_string() const;

    int size() const { return static_cast<int>(members_.size()); }
    bool is_empty() const { return members_.empty(); }
    int parent_size() const { return parent_size_; }
    const std::vector<int>& members() const { return members_; }

    bool contains(int v) const;

    /// Copy with v added; v must not already be a member.
    Subset with(int v) const;

    /// Copy with v removed; v must be a member.
    Subset without(int v) const;

    Subset union_with(const Subset& other) const;
    Subset intersect(const Subset& other) const;
    Subset difference(const Subset& other) const;
    Subset complement() const;

    bool is_subset_of(const Subset& other) const;

    /// Bit mask over the parent universe; parent_size() must be <= 32.
    uint32_t to_mask() const;

    std::vector<int>::const_iterator begin() const { return members_.begin(); }
    std::vector<int>::const_iterator end() const { return members_.end(); }

    bool operator==(const Subset& other) const {
        return parent_size_ == other.parent_size_ && members_ == other.members_;
    }
    bool operator!=(const Subset& other) const { return !(*this == other); }

    /// Lexicographic order on the member sequences.
    bool operator<(const Subset& other) const { return members_ < other.members_; }

private:
    void require_same_parent(const Subset& other) const;

    std::vector<int> members_;
    int parent_size_ = 0;
};

}  // namespace resmax
