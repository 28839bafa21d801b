#pragma once

#include <string>
#include <variant>

#include "adictop/errors.hpp"
#include "adictop/rational_function.hpp"

namespace adictop {

enum class Field { Q, Qt };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(t)"; }

// Universal scalar: an exact element of Q or of Q(t).  Arithmetic promotes
// Q into Q(t) (constants embed); a Q(t) value never demotes.
class Ground {
public:
    Ground() : v_(Rat(0)) {}
    Ground(Rat x) : v_(std::move(x)) {}        // NOLINT: implicit by design
    Ground(RatFunc x) : v_(std::move(x)) {}    // NOLINT: implicit by design
    Ground(long x) : v_(Rat(x)) {}             // NOLINT: implicit by design
    Ground(const Int& x) : v_(Rat(x)) {}       // NOLINT: implicit by design

    Field field() const { return std::holds_alternative<Rat>(v_) ? Field::Q : Field::Qt; }
    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rational() const;
    const RatFunc& function() const;

    // View on the requested field; Q values lift to constants of Q(t).
    RatFunc as_function() const;
    Rat as_rational() const;  // FieldMismatchError for a genuine function

    bool is_zero() const;

    Ground operator-() const;
    Ground operator+(const Ground& o) const;
    Ground operator-(const Ground& o) const;
    Ground operator*(const Ground& o) const;
    Ground operator/(const Ground& o) const;
    bool operator==(const Ground& o) const;
    bool operator!=(const Ground& o) const { return !(*this == o); }

    Ground pow(long e) const;

    std::string to_string() const;

private:
    std::variant<Rat, RatFunc> v_;
};

}  // namespace adictop
