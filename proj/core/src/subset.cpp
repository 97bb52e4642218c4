#include "resmax/subset.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "resmax/errors.hpp"

namespace resmax {

GroundSet::GroundSet(int size) : size_(size) {
    if (size < 1) {
        throw InvalidInputError("ground set size must be at least 1, got " +
                                std::to_string(size));
    }
}

Subset::Subset(std::vector<int> members, int parent_size)
    : members_(std::move(members)), parent_size_(parent_size) {
    if (parent_size_ < 0) {
        throw InvalidInputError("subset parent size must be non-negative");
    }
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        int v = members_[i];
        if (v < 0 || v >= parent_size_) {
            throw InvalidInputError("element " + std::to_string(v) +
                                    " is outside the ground set of size " +
                                    std::to_string(parent_size_));
        }
        if (i > 0 && members_[i - 1] == v) {
            throw InvalidInputError("duplicate element " + std::to_string(v) +
                                    " in subset");
        }
    }
}

Subset Subset::empty(int parent_size) { return Subset({}, parent_size); }

Subset Subset::full(int parent_size) {
    std::vector<int> all(static_cast<std::size_t>(parent_size));
    for (int v = 0; v < parent_size; ++v) all[static_cast<std::size_t>(v)] = v;
    return Subset(std::move(all), parent_size);
}

namespace {

void skip_spaces(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
}

}  // namespace

Subset Subset::parse(const std::string& text, int parent_size) {
    std::size_t pos = 0;
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != '{') {
        throw ParseError("subset literal must start with '{': \"" + text + "\"");
    }
    ++pos;
    std::vector<int> members;
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_spaces(text, pos);
            int value = 0;
            const char* first = text.data() + pos;
            const char* last = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr == first) {
                throw ParseError("expected an integer at position " +
                                 std::to_string(pos) + " in subset literal \"" +
                                 text + "\"");
            }
            pos = static_cast<std::size_t>(ptr - text.data());
            if (!members.empty() && value <= members.back()) {
                throw ParseError("subset members must be strictly increasing: \"" +
                                 text + "\"");
            }
            members.push_back(value);
            skip_spaces(text, pos);
            if (pos >= text.size()) {
                throw ParseError("unterminated subset literal \"" + text + "\"");
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in subset literal \"" + text + "\"");
        }
    }
    skip_spaces(text, pos);
    if (pos != text.size()) {
        throw ParseError("trailing characters after subset literal \"" + text +
                         "\"");
    }
    return Subset(std::move(members), parent_size);
}

std::string Subset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(members_[i]);
    }
    out += '}';
    return out;
}

bool Subset::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Subset Subset::with(int v) const {
    if (v < 0 || v >= parent_size_) {
        throw InvalidInputError("element " + std::to_string(v) +
                                " is outside the ground set of size " +
                                std::to_string(parent_size_));
    }
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) {
        throw InvalidInputError("element " + std::to_string(v) +
                                " is already a member");
    }
    Subset out = *this;
    out.members_.insert(out.members_.begin() + (it - members_.begin()), v);
    return out;
}

Subset Subset::without(int v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) {
        throw InvalidInputError("element " + std::to_string(v) +
                                " is not a member");
    }
    Subset out = *this;
    out.members_.erase(out.members_.begin() + (it - members_.begin()));
    return out;
}

void Subset::require_same_parent(const Subset& other) const {
    if (parent_size_ != other.parent_size_) {
        throw InvalidInputError("subsets belong to different ground sets (" +
                                std::to_string(parent_size_) + " vs " +
                                std::to_string(other.parent_size_) + ")");
    }
}

Subset Subset::union_with(const Subset& other) const {
    require_same_parent(other);
    Subset out;
    out.parent_size_ = parent_size_;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

Subset Subset::intersect(const Subset& other) const {
    require_same_parent(other);
    Subset out;
    out.parent_size_ = parent_size_;
    std::set_intersection(members_.begin(), members_.end(),
                          other.members_.begin(), other.members_.end(),
                          std::back_inserter(out.members_));
    return out;
}

Subset Subset::difference(const Subset& other) const {
    require_same_parent(other);
    Subset out;
    out.parent_size_ = parent_size_;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

Subset Subset::complement() const {
    Subset out;
    out.parent_size_ = parent_size_;
    out.members_.reserve(static_cast<std::size_t>(parent_size_ - size()));
    auto it = members_.begin();
    for (int v = 0; v < parent_size_; ++v) {
        if (it != members_.end() && *it == v) {
            ++it;
        } else {
            out.members_.push_back(v);
        }
    }
    return out;
}

bool Subset::is_subset_of(const Subset& other) const {
    require_same_parent(other);
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

uint32_t Subset::to_mask() const {
    if (parent_size_ > 32) {
        throw InvalidInputError("bit masks require a ground set of size <= 32");
    }
    uint32_t mask = 0;
    for (int v : members_) mask |= (uint32_t{1} << v);
    return mask;
}

}  // namespace resmax
