#pragma once

#include <optional>
#include <string>

#include "tamagawa/arith.hpp"

namespace tamagawa {

/// Thrown when coefficients describe a singular cubic (disc = 0).
struct singular_model_error : domain_error {
    using domain_error::domain_error;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
/// with exact rational coefficients. Nonsingular by construction.
class WeierstrassModel {
  public:
    WeierstrassModel(Rat a1, Rat a2, Rat a3, Rat a4, Rat a6);
    static std::optional<WeierstrassModel> try_make(const Rat& a1, const Rat& a2,
                                                    const Rat& a3, const Rat& a4,
                                                    const Rat& a6);

    const Rat& a1() const { return a1_; }
    const Rat& a2() const { return a2_; }
    const Rat& a3() const { return a3_; }
    const Rat& a4() const { return a4_; }
    const Rat& a6() const { return a6_; }

    Rat b2() const;
    Rat b4() const;
    Rat b6() const;
    Rat b8() const;
    Rat c4() const;
    Rat c6() const;
    const Rat& disc() const { return disc_; }
    Rat j() const;

    bool integral() const;
    /// a-invariants as exact integers; throws unless integral().
    std::array<Int, 5> ainvs_z() const;

    friend bool operator==(const WeierstrassModel&, const WeierstrassModel&) = default;

    /// "[a1,a2,a3,a4,a6]" with exact fractions.
    std::string str() const;
    /// Parses "[a1,a2,a3,a4,a6]"; entries may be integers, fractions "p/q",
    /// or decimal strings "1.25".
    static WeierstrassModel parse(const std::string& text);

  private:
    Rat a1_, a2_, a3_, a4_, a6_;
    Rat disc_;
};

/// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t mapping a
/// source model to a target model; disc' = u^-12 disc.
struct ModelMap {
    Rat u = 1, r = 0, s = 0, t = 0;

    WeierstrassModel apply(const WeierstrassModel& e) const;
    ModelMap inverse() const;
    /// The map performing `this` then `then`.
    ModelMap then(const ModelMap& next) const;
    bool is_identity() const { return u == 1 && r == 0 && s == 0 && t == 0; }
};

struct CurvePoint {
    bool infinity = true;
    Rat x = 0, y = 0;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveInvariants {
    Rat c4, c6, disc, j;
};

CurveInvariants invariants(const WeierstrassModel& e);

/// Isomorphic model with integer coefficients via the least u = 1/m scaling.
std::pair<WeierstrassModel, ModelMap> integral_model(const WeierstrassModel& e);

/// Model minimal at every prime, reduced so a1, a3 in {0,1} and a2 in
/// {-1,0,1}. Laska-Kraus-Connell realized per prime by the Tate loop.
std::pair<WeierstrassModel, ModelMap> global_minimal_model(const WeierstrassModel& e);

/// Quadratic twist by a square-free d != 0; the long model is completed to
/// short form first. The result is not re-minimalized.
WeierstrassModel quadratic_twist(const WeierstrassModel& e, const Int& d);

bool on_curve(const WeierstrassModel& e, const CurvePoint& p);
CurvePoint negate(const WeierstrassModel& e, const CurvePoint& p);
CurvePoint add(const WeierstrassModel& e, const CurvePoint& p, const CurvePoint& q);

/// Exact order of P when at most `cap`; nullopt means "infinite or exceeds
/// bound" (Mazur caps rational torsion at 12, so 16 is conclusive).
std::optional<unsigned> point_order(const WeierstrassModel& e, const CurvePoint& p,
                                    unsigned cap = 16);

}  // namespace tamagawa
