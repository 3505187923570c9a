#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace weakiasi {

/// Non-empty finite set of non-negative integers, kept sorted and
/// deduplicated so that set equality is plain structural equality.
class SetLabel {
public:
    using value_type = std::uint64_t;

    SetLabel(std::initializer_list<value_type> elements) : SetLabel(std::vector<value_type>(elements)) {}

    explicit SetLabel(std::vector<value_type> elements) : elements_(std::move(elements))
    {
        if (elements_.empty())
            throw std::invalid_argument("set label must be non-empty");
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    static SetLabel singleton(value_type x) { return SetLabel({x}); }

    std::size_t size() const noexcept { return elements_.size(); }
    bool is_singleton() const noexcept { return elements_.size() == 1; }
    std::span<const value_type> elements() const noexcept { return elements_; }
    value_type min() const noexcept { return elements_.front(); }
    value_type max() const noexcept { return elements_.back(); }

    /// Every element shifted by `offset`.
    SetLabel translated(value_type offset) const
    {
        std::vector<value_type> out(elements_);
        for (auto& x : out)
            x += offset;
        return SetLabel(std::move(out));
    }

    std::string to_string() const
    {
        std::string out = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(elements_[i]);
        }
        return out + "}";
    }

    friend auto operator<=>(const SetLabel&, const SetLabel&) = default;
    friend bool operator==(const SetLabel&, const SetLabel&) = default;

private:
    std::vector<value_type> elements_;
};

/// A + B = {a + b : a in A, b in B}.
inline SetLabel sumset(const SetLabel& a, const SetLabel& b)
{
    std::vector<SetLabel::value_type> out;
    out.reserve(a.size() * b.size());
    for (auto x : a.elements())
        for (auto y : b.elements())
            out.push_back(x + y);
    return SetLabel(std::move(out));
}

} // namespace weakiasi
