#include "clgeo/identities.hpp"

#include <cmath>
#include <map>

namespace clgeo {

namespace {

// number of members of L contained in pi
int contained_count(const KSet& L, const Subspace& pi) {
    const auto& table = SubspaceTable::get(L.g, L.k);
    int count = 0;
    for (int id : L.members)
        if (contains(pi, table.at(id))) ++count;
    return count;
}

// restriction parameters x_pi for all t-spaces, plus sum of x_pi over the
// t-spaces through each k-space
void restriction_sums(const KSet& L, int t, std::vector<Rational>* xs,
                      std::vector<Rational>* sums) {
    const auto& tspaces = SubspaceTable::get(L.g, t);
    const auto& kspaces = SubspaceTable::get(L.g, L.k);
    const BigInt per = gauss_binomial(t, L.k, L.g.q());
    if (xs) xs->assign(tspaces.size(), Rational(0));
    if (sums) sums->assign(kspaces.size(), Rational(0));
    for (int c = 0; c < tspaces.size(); ++c) {
        Rational x(BigInt(contained_count(L, tspaces.at(c))), per);
        if (xs) (*xs)[c] = x;
        if (sums)
            for (int K = 0; K < kspaces.size(); ++K)
                if (contains(tspaces.at(c), kspaces.at(K))) (*sums)[K] += x;
    }
}

int chi(const KSet& L, int id) { return L.contains_id(id) ? 1 : 0; }

Rational lemma41_value(const KSet& L, int t, int chiK, const Rational& sum) {
    const int n = L.g.n, k = L.k, q = L.g.q();
    return Rational(chiK) + (sum - Rational(gauss_binomial(n - k, t - k, q) * chiK)) /
                                Rational(gauss_binomial(n - k - 1, t - k - 1, q));
}

Rational lemma42_value(const KSet& L, int t, int chiL, const Rational& sum) {
    const int n = L.g.n;
    const BigInt q = L.g.q();
    return Rational(pow_int(q, t - 2) - 1, pow_int(q, n - 2) - 1) * sum /
               Rational(gauss_binomial(n - 3, t - 3, L.g.q())) -
           Rational((pow_int(q, n - 1) - 1) * chiL, pow_int(q, t - 1) - 1) +
           Rational(chiL);
}

// per-direction member counts over all line directions of AG(n,q)
std::map<std::vector<felem>, int> direction_counts(const KSet& L) {
    const auto& table = SubspaceTable::get(L.g, 1);
    std::map<std::vector<felem>, int> counts;
    for (int c = 0; c < table.size(); ++c) counts[direction_space(table.at(c)).a] = 0;
    for (int id : L.members) ++counts[direction_space(table.at(id)).a];
    return counts;
}

}  // namespace

IdentityReport check_lemma212(const KSet& L, const Subspace& p, const Subspace& tau) {
    const Geometry& g = L.g;
    if (g.kind != Kind::PG) throw std::invalid_argument("check_lemma212: PG only");
    if (p.k != 0) throw std::invalid_argument("check_lemma212: p must be a point");
    const int i = tau.k, k = L.k, n = g.n;
    if (i < k + 1) throw std::invalid_argument("check_lemma212: dim(tau) must exceed k");
    if (!incident(g, p, tau)) throw std::invalid_argument("check_lemma212: p must lie in tau");
    const BigInt q = g.q();

    const auto& table = SubspaceTable::get(g, k);
    int through_p = 0, in_tau = 0, both = 0;
    for (int id : L.members) {
        const Subspace& s = table.at(id);
        const bool a = incident(g, p, s), b = contains(tau, s);
        through_p += a;
        in_tau += b;
        both += a && b;
    }

    const BigInt gn = gauss_binomial(n - 1, k, g.q());
    const BigInt gi = gauss_binomial(i - 1, k, g.q());
    Rational lhs = Rational(through_p) +
                   Rational(gn * (pow_int(q, k) - 1), gi * (pow_int(q, i) - 1)) * in_tau;
    Rational rhs = Rational(gn, gi) * both +
                   Rational(pow_int(q, k) - 1, pow_int(q, n) - 1) * L.size();
    return {"lemma212", lhs, rhs, lhs == rhs};
}

Rational lemma41_parameter(const KSet& L, int K, int t) {
    const Geometry& g = L.g;
    if (g.kind != Kind::PG) throw std::invalid_argument("lemma41_parameter: PG only");
    if (t < 2 * L.k + 1 || t > g.n - 1)
        throw std::out_of_range("lemma41_parameter: t out of range");
    const auto& tspaces = SubspaceTable::get(g, t);
    const auto& kspaces = SubspaceTable::get(g, L.k);
    const BigInt per = gauss_binomial(t, L.k, g.q());
    Rational sum = 0;
    for (int c = 0; c < tspaces.size(); ++c)
        if (contains(tspaces.at(c), kspaces.at(K)))
            sum += Rational(BigInt(contained_count(L, tspaces.at(c))), per);
    return lemma41_value(L, t, chi(L, K), sum);
}

Rational lemma42_parameter(const KSet& L, int ell, int t) {
    const Geometry& g = L.g;
    if (g.kind != Kind::AG || L.k != 1)
        throw std::invalid_argument("lemma42_parameter: AG lines only");
    if (g.n < 4) throw std::invalid_argument("lemma42_parameter: n >= 4 required");
    if (t < 3 || t > g.n - 1) throw std::out_of_range("lemma42_parameter: t out of range");
    const auto& tflats = SubspaceTable::get(g, t);
    const auto& lines = SubspaceTable::get(g, 1);
    const BigInt per = gauss_binomial(t, 1, g.q());
    Rational sum = 0;
    for (int c = 0; c < tflats.size(); ++c)
        if (contains(tflats.at(c), lines.at(ell)))
            sum += Rational(BigInt(contained_count(L, tflats.at(c))), per);
    return lemma42_value(L, t, chi(L, ell), sum);
}

bool AdmissibleParameters::admits(const Rational& x) const {
    if (x.is_zero()) return true;
    if (x < 1 || x > max) return false;
    Rational c = (x - 1) * Rational(denominator);
    return boost::multiprecision::denominator(c) == 1;
}

AdmissibleParameters thm51_admissible(int n, int k, int q, int t) {
    if ((t + 1) % (k + 1) != 0)
        throw std::invalid_argument("thm51_admissible: (k+1) must divide (t+1)");
    if (t < 2 * k + 1 || t > n - 1)
        throw std::out_of_range("thm51_admissible: t out of range");
    return {gauss_binomial(n - k - 1, t - k - 1, q),
            Rational(pow_int(q, n + 1) - 1, pow_int(q, k + 1) - 1)};
}

BigInt cor52_count(int n, int k, int q) {
    if (n < 2 * k + 2) throw std::invalid_argument("cor52_count: n >= 2k+2 required");
    Rational v = Rational(pow_int(q, k + 1) * (pow_int(q, n - k) - 1), pow_int(q, k + 1) - 1) *
                     Rational(gauss_binomial(n - k - 1, k, q)) +
                 2;
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("cor52_count: non-integer value");
    return boost::multiprecision::numerator(v);
}

GlueReport glue_constant_pg(const KSet& M, int t) {
    const Geometry& g = M.g;
    if (g.kind != Kind::PG) throw std::invalid_argument("glue_constant_pg: PG only");
    if (t < 2 * M.k + 1 || t > g.n - 1)
        throw std::out_of_range("glue_constant_pg: t out of range");

    GlueReport rep{true, std::nullopt, true, Rational(0), std::nullopt, true, false};
    const auto& tspaces = SubspaceTable::get(g, t);
    for (int c = 0; c < tspaces.size(); ++c)
        if (!verify_def1(restrict_to(M, tspaces.at(c))).pass) {
            rep.restrictions_cl = false;
            rep.bad_restriction = c;
            return rep;
        }

    std::vector<Rational> sums;
    restriction_sums(M, t, nullptr, &sums);
    const int nk = SubspaceTable::get(g, M.k).size();
    int first = 0;
    rep.value = lemma41_value(M, t, chi(M, first), sums[first]);
    for (int K = 1; K < nk; ++K) {
        Rational c = lemma41_value(M, t, chi(M, K), sums[K]);
        if (c != rep.value) {
            rep.constant = false;
            rep.witness = {first, K};
            return rep;
        }
    }
    rep.verdict = verify_def1(M).pass;
    return rep;
}

GlueReport glue_constant_ag(const KSet& M, int t) {
    const Geometry& g = M.g;
    if (g.kind != Kind::AG || M.k != 1)
        throw std::invalid_argument("glue_constant_ag: AG lines only");
    if (g.n < 4) throw std::invalid_argument("glue_constant_ag: n >= 4 required");
    if (t < 3 || t > g.n - 1) throw std::out_of_range("glue_constant_ag: t out of range");

    GlueReport rep{true, std::nullopt, true, Rational(0), std::nullopt, true, false};
    const auto& tflats = SubspaceTable::get(g, t);
    for (int c = 0; c < tflats.size(); ++c)
        if (!verify_def1(restrict_to(M, tflats.at(c))).pass) {
            rep.restrictions_cl = false;
            rep.bad_restriction = c;
            return rep;
        }

    const auto& lines = SubspaceTable::get(g, 1);
    const BigInt per = gauss_binomial(t, 1, g.q());
    std::vector<Rational> sums(lines.size(), Rational(0));
    for (int c = 0; c < tflats.size(); ++c) {
        Rational x(BigInt(contained_count(M, tflats.at(c))), per);
        for (int l = 0; l < lines.size(); ++l)
            if (contains(tflats.at(c), lines.at(l))) sums[l] += x;
    }
    rep.value = lemma42_value(M, t, chi(M, 0), sums[0]);
    for (int l = 1; l < lines.size(); ++l) {
        Rational c = lemma42_value(M, t, chi(M, l), sums[l]);
        if (c != rep.value) {
            rep.constant = false;
            rep.witness = {0, l};
            return rep;
        }
    }
    // constant must be an integer and every direction must carry C lines
    if (boost::multiprecision::denominator(rep.value) != 1) {
        rep.constant = false;
        return rep;
    }
    for (const auto& [dir, count] : direction_counts(M))
        if (Rational(count) != rep.value) {
            rep.infinity_ok = false;
            return rep;
        }
    rep.verdict = verify_def1(M).pass;
    return rep;
}

BoundReport bound_thm62(int n, int k, int q) {
    BoundReport r{"thm62", n, k, q, n >= 3 * k + 3, "n >= 3k+3", Rational(0)};
    if (r.applicable)
        r.value = Rational(pow_int(q, n - k) - 1, pow_int(q, 2 * k + 2) - 1) + 1;
    return r;
}

BoundReport bound_thm64(int n, int k, int q) {
    BoundReport r{"thm64", n, k, q, n >= 2 * k + 2, "n >= 2k+2", Rational(0)};
    if (r.applicable)
        r.value = Rational(BigInt(2) * (pow_int(q, n - k) - 1), pow_int(q, k + 1) - 1) + 1;
    return r;
}

BoundReport bound_thm72(int n, int q) {
    BoundReport r{"thm72", n, 1, q, n >= 4, "n >= 4", Rational(0)};
    if (r.applicable)
        r.value = Rational(BigInt(2) * (pow_int(q, n - 1) - 1), BigInt(q) * q - 1) + 1;
    return r;
}

RealBoundReport bound_thm66(int n, int k, int q) {
    RealBoundReport r{"thm66", n, k, q, n >= 3 * k + 2 && q >= 3, 0.0L};
    if (!r.applicable) return r;
    const long double qd = q;
    r.value = std::pow(2.0L, -0.125L) *
              std::pow(qd, n / 2.0L - k * k / 4.0L - 3.0L * k / 4.0L - 1.5L) *
              std::pow(qd - 1, k * k / 4.0L - k / 4.0L + 0.5L) *
              std::sqrt(qd * qd + qd + 1);
    return r;
}

ScanBoundReport bound_thm67_maxx(int n, int k, int q) {
    ScanBoundReport r{n, k, q, n >= 2 * k + 1, 0};
    if (!r.applicable) return r;
    const int m = (n + 1 + k) / (k + 1);  // smallest m with m(k+1) >= n+1
    const int rr = m * (k + 1) - (n + 1);
    const BigInt cap_fixed = n - 2 * k - rr >= 0 ? pow_int(q, n - 2 * k - rr) : BigInt(0);
    BigInt best = 0;
    for (BigInt x = 1;; ++x) {
        BigInt cube = x * 16;
        cube = cube * cube * cube;
        if (cube > cap_fixed) break;  // this cap no longer depends on x
        // l with (q^{l-1}-1)/(q-1) < x <= (q^l-1)/(q-1)
        int l = 1;
        while (Rational(pow_int(q, l) - 1, q - 1) < x) ++l;
        const BigInt cap_l = n - k - l + 2 >= 0 ? pow_int(q, n - k - l + 2) : BigInt(0);
        if (cube <= cap_l) best = x;
    }
    r.max_x = best;
    return r;
}

}  // namespace clgeo
