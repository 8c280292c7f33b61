#ifndef EDGEBETTI_FIELD_HPP
#define EDGEBETTI_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace edgebetti {

/// Coefficient field for homology: exact rationals or GF(p).
class FieldSpec {
public:
    enum class Kind { rational, prime };

    static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    static FieldSpec gf2() { return prime(2); }
    /// "rational" | "qq" | "gf2" | "gfp:<p>"
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

} // namespace edgebetti

#endif
