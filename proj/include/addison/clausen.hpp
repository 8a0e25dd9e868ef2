#pragma once

#include <istream>
#include <vector>

#include "addison/eval.hpp"

namespace addison {

/// Cosine integral Ci(z) = -int_z^inf cos t / t dt, z > 0.
Eval cosint(double z);

/// Sine integral Si(z) = int_0^z sin t / t dt.
Eval sinint(double z);

/// Generalized Clausen function Cl_n(theta), n >= 2, theta in [0, 2 pi].
Eval clausen(int n, double theta);

/// Cl_2(theta) through the cosine-integral form, theta in (0, 2 pi).
Eval clausen2_ci(double theta);

/// Catalan's constant from the cosine-integral form at theta = pi/2.
Eval catalan();

enum class L4Method { hurwitz_combo, addison };

/// L(s) for the non-principal character modulo 4, s >= 0.
Eval dirichlet_L4(double s, L4Method method = L4Method::hurwitz_combo);

/// Real Dirichlet character modulo m; values[k-1] = chi(k) for k = 1..m.
struct CharacterTable {
    int modulus = 1;
    std::vector<double> values{1.0};
    bool principal = true;

    /// Validates the table (multiplicativity, zeros off the unit group, principal flag).
    static CharacterTable make(int modulus, std::vector<double> values);
    /// Text form: line 1 the modulus, line 2 the m values.
    static CharacterTable parse(std::istream& in);
};

/// L(s, chi) = m^{-s} sum_k chi(k) zeta(s, k/m); s >= 1 (principal) or s >= 0.
Eval dirichlet_L(double s, const CharacterTable& chi);

/// L'(1) for the modulo-4 character from first Stieltjes constants.
Eval L4_prime1();

/// The same value assembled from Gamma(1/4), Gamma(3/4).
double L4_prime1_closed_form();

}  // namespace addison
