#pragma once

#include <padic/context.hpp>
#include <padic/number.hpp>
#include <padic/rational.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace padic {

/// The ball a + p^n Z_p, 0 <= a < p^n.
struct ClopenBall {
    long residue;
    int level;
};

/// Finite union of balls, stored as the residue set at one level.
/// Two clopen sets are combined at the finer of their levels.
class ClopenSet {
public:
    ClopenSet(long p, int level);  // empty set presented at `level`

    static ClopenSet empty(long p) { return ClopenSet(p, 0); }
    static ClopenSet whole(long p);
    static ClopenSet ball(long p, const ClopenBall& b);

    long prime() const { return p_; }
    int level() const { return level_; }
    bool is_empty() const;
    bool contains(long residue) const { return members_[static_cast<size_t>(residue)]; }
    long size() const;

    ClopenSet& add_ball(long residue);
    ClopenSet refined(int level) const;
    /// Minimal level at which the set is a union of residues.
    ClopenSet canonical() const;

    ClopenSet complement() const;
    friend ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
    friend ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);

    std::vector<long> residues() const;

    friend bool operator==(const ClopenSet& a, const ClopenSet& b);

private:
    long p_;
    int level_;
    std::vector<bool> members_;  // size p^level
};

/// The absolute value |x|_q of a measure value, as q^exponent (or 0).
struct NormValue {
    bool zero;
    long exponent;

    friend bool operator==(const NormValue& a, const NormValue& b) {
        return a.zero == b.zero && (a.zero || a.exponent == b.exponent);
    }
};

struct SeminormEstimate {
    NormValue norm;
    int depth;
    bool exact;
};

struct AdditivityReport {
    bool ok;
    std::vector<long> failing_residues;
};

/// Finitely additive assignment of exact values in Q_{value_prime} to the
/// clopen balls of Z_p. The concrete instances:
///   - bernoulli_mu1:      mu1(a + p^n Z_p) = a/p^n - 1/2   (unbounded)
///   - regularized:        mu(a + p^n Z_p) = (-1)^a / 2     (bounded)
///   - qadic_haar:         values 1/p^n in Q_q, q != p      (bounded)
///   - haar_distribution:  values 1/p^n in Q_p              (unbounded, no seminorm)
///   - table:              level-N table of values, summed over balls
class Measure {
public:
    enum class Kind { bernoulli_mu1, regularized, qadic_haar, haar_distribution, table };

    static Measure bernoulli_mu1(long p);
    static Measure regularized(long p);
    static Measure qadic_haar(long p, long q);
    static Measure haar_distribution(long p);
    static Measure table(long p, int level, std::vector<Rational> values);
    /// Text format: header "p N", then one line "residue num/den" per residue.
    static Measure load_table(std::istream& in);
    static Measure load_table_file(const std::string& path);

    Kind kind() const { return kind_; }
    long domain_prime() const { return p_; }
    long value_prime() const { return q_; }
    bool bounded() const { return bounded_; }
    int table_level() const { return table_level_; }

    /// Exact value on a ball. Throws when a table measure is asked below
    /// its level.
    Rational ball_value(const ClopenBall& b) const;

    /// Additive extension to clopen sets; independent of presentation level.
    Rational set_value(const ClopenSet& A) const;
    PadicNumber set_value_padic(const ClopenSet& A, int prec) const;

    /// Depth-d estimate of ||A||: max |ball value| over the depth-d
    /// decomposition of A. Exact when the instance has constant absolute
    /// value below that depth. Rejected for the Q_p-valued Haar
    /// distribution, whose sup is infinite at every depth.
    SeminormEstimate seminorm(const ClopenSet& A, int depth) const;

    /// Checks mu(ball at level n) = sum of its p children for every residue.
    AdditivityReport additivity_check(int level) const;

private:
    Measure(Kind k, long p, long q, bool bounded) : kind_(k), p_(p), q_(q), bounded_(bounded) {}

    Kind kind_;
    long p_;
    long q_;
    bool bounded_;
    int table_level_ = 0;
    std::vector<Rational> table_;
};

NormValue rational_norm(const Rational& x, long q);

}  // namespace padic
