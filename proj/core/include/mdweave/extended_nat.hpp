#ifndef mdweave_extended_nat_hpp
#define mdweave_extended_nat_hpp

#include <cstdint>
#include <limits>
#include <string>

namespace mdweave {

// A natural number extended with the maximum element Top (unbounded).
class ExtendedNat {
public:
    constexpr ExtendedNat(std::uint64_t n) : raw_(n) {}

    static constexpr ExtendedNat top() { return ExtendedNat(kTop, 0); }

    constexpr bool is_top() const { return raw_ == kTop; }

    // Pre: !is_top().
    constexpr std::uint64_t value() const { return raw_; }

    constexpr bool operator==(const ExtendedNat&) const = default;

    std::string to_string() const {
        return is_top() ? "top" : std::to_string(raw_);
    }

private:
    static constexpr std::uint64_t kTop =
        std::numeric_limits<std::uint64_t>::max();

    constexpr ExtendedNat(std::uint64_t raw, int) : raw_(raw) {}

    std::uint64_t raw_;
};

// a <= b in the extended order where Top is the maximum.
constexpr bool ext_le(ExtendedNat a, ExtendedNat b) {
    if (b.is_top()) return true;
    if (a.is_top()) return false;
    return a.value() <= b.value();
}

// count >= n for a plain natural count; count >= Top is never true.
constexpr bool count_at_least(std::uint64_t count, ExtendedNat n) {
    if (n.is_top()) return false;
    return count >= n.value();
}

// count <= n; count <= Top always holds.
constexpr bool count_at_most(std::uint64_t count, ExtendedNat n) {
    if (n.is_top()) return true;
    return count <= n.value();
}

} // namespace mdweave

#endif
