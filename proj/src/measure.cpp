#include <padic/measure.hpp>

#include <fstream>
#include <istream>
#include <sstream>

namespace padic {

namespace {

constexpr long kMaxSetSize = 100'000'000;

long checked_size(long p, int level) {
    long double s = 1;
    for (int i = 0; i < level; ++i) {
        s *= p;
        if (s > static_cast<long double>(kMaxSetSize))
            throw DomainError("clopen set: level exceeds the level cap");
    }
    return static_cast<long>(s);
}

}  // namespace

ClopenSet::ClopenSet(long p, int level) : p_(p), level_(level) {
    if (level < 0) throw DomainError("clopen set: negative level");
    members_.assign(static_cast<size_t>(checked_size(p, level)), false);
}

ClopenSet ClopenSet::whole(long p) {
    ClopenSet s(p, 0);
    s.members_[0] = true;
    return s;
}

ClopenSet ClopenSet::ball(long p, const ClopenBall& b) {
    ClopenSet s(p, b.level);
    if (b.residue < 0 || b.residue >= static_cast<long>(s.members_.size()))
        throw DomainError("clopen ball: residue out of range");
    s.members_[static_cast<size_t>(b.residue)] = true;
    return s;
}

bool ClopenSet::is_empty() const {
    for (bool m : members_)
        if (m) return false;
    return true;
}

long ClopenSet::size() const {
    long n = 0;
    for (bool m : members_) n += m;
    return n;
}

ClopenSet& ClopenSet::add_ball(long residue) {
    if (residue < 0 || residue >= static_cast<long>(members_.size()))
        throw DomainError("clopen set: residue out of range");
    members_[static_cast<size_t>(residue)] = true;
    return *this;
}

ClopenSet ClopenSet::refined(int level) const {
    if (level < level_) throw DomainError("refined: coarser than current level");
    ClopenSet r(p_, level);
    long stride = static_cast<long>(members_.size());
    long total = static_cast<long>(r.members_.size());
    // children of residue a at level n are a + j p^n
    for (long a = 0; a < stride; ++a) {
        if (!members_[static_cast<size_t>(a)]) continue;
        for (long x = a; x < total; x += stride) r.members_[static_cast<size_t>(x)] = true;
    }
    return r;
}

ClopenSet ClopenSet::canonical() const {
    ClopenSet c = *this;
    while (c.level_ > 0) {
        long stride = static_cast<long>(c.members_.size()) / c.p_;
        bool reducible = true;
        for (long a = 0; a < stride && reducible; ++a) {
            bool v = c.members_[static_cast<size_t>(a)];
            for (long j = 1; j < c.p_; ++j)
                if (c.members_[static_cast<size_t>(a + j * stride)] != v) {
                    reducible = false;
                    break;
                }
        }
        if (!reducible) break;
        ClopenSet down(c.p_, c.level_ - 1);
        for (long a = 0; a < stride; ++a) down.members_[static_cast<size_t>(a)] = c.members_[static_cast<size_t>(a)];
        c = down;
    }
    return c;
}

ClopenSet ClopenSet::complement() const {
    ClopenSet r = *this;
    r.members_.flip();
    return r;
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
    if (a.p_ != b.p_) throw DomainError("set_union: different primes");
    int lvl = std::max(a.level_, b.level_);
    ClopenSet x = a.refined(lvl), y = b.refined(lvl);
    for (size_t i = 0; i < x.members_.size(); ++i)
        x.members_[i] = x.members_[i] || y.members_[i];
    return x;
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b) {
    if (a.p_ != b.p_) throw DomainError("set_intersection: different primes");
    int lvl = std::max(a.level_, b.level_);
    ClopenSet x = a.refined(lvl), y = b.refined(lvl);
    for (size_t i = 0; i < x.members_.size(); ++i)
        x.members_[i] = x.members_[i] && y.members_[i];
    return x;
}

std::vector<long> ClopenSet::residues() const {
    std::vector<long> r;
    for (long a = 0; a < static_cast<long>(members_.size()); ++a)
        if (members_[static_cast<size_t>(a)]) r.push_back(a);
    return r;
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
    if (a.p_ != b.p_) return false;
    ClopenSet x = a.canonical(), y = b.canonical();
    return x.level_ == y.level_ && x.members_ == y.members_;
}

// ---------------------------------------------------------------------

Measure Measure::bernoulli_mu1(long p) { return Measure(Kind::bernoulli_mu1, p, p, false); }

Measure Measure::regularized(long p) { return Measure(Kind::regularized, p, p, true); }

Measure Measure::qadic_haar(long p, long q) {
    if (p == q) throw DomainError("qadic_haar: q must differ from the domain prime");
    if (!is_odd_prime(q) && q != 2) throw DomainError("qadic_haar: q must be prime");
    return Measure(Kind::qadic_haar, p, q, true);
}

Measure Measure::haar_distribution(long p) {
    return Measure(Kind::haar_distribution, p, p, false);
}

Measure Measure::table(long p, int level, std::vector<Rational> values) {
    Measure m(Kind::table, p, p, true);
    if (static_cast<long>(values.size()) != checked_size(p, level))
        throw DomainError("table measure: wrong number of entries");
    m.table_level_ = level;
    m.table_ = std::move(values);
    return m;
}

Measure Measure::load_table(std::istream& in) {
    long p;
    int level;
    if (!(in >> p >> level)) throw DomainError("table measure: bad header, expected \"p N\"");
    long n = checked_size(p, level);
    std::vector<Rational> vals(static_cast<size_t>(n), Rational(0));
    long residue;
    std::string value;
    while (in >> residue >> value) {
        if (residue < 0 || residue >= n) throw DomainError("table measure: residue out of range");
        Rational q(value);
        q.canonicalize();
        vals[static_cast<size_t>(residue)] = q;
    }
    return table(p, level, std::move(vals));
}

Measure Measure::load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("table measure: cannot open " + path);
    return load_table(in);
}

Rational Measure::ball_value(const ClopenBall& b) const {
    long pn = checked_size(p_, b.level);
    if (b.residue < 0 || b.residue >= pn) throw DomainError("ball_value: residue out of range");
    switch (kind_) {
        case Kind::bernoulli_mu1: {
            Rational r(b.residue, pn);
            r -= Rational(1, 2);
            r.canonicalize();
            return r;
        }
        case Kind::regularized:
            return b.residue % 2 == 0 ? Rational(1, 2) : Rational(-1, 2);
        case Kind::qadic_haar:
        case Kind::haar_distribution:
            return Rational(1, pn);
        case Kind::table: {
            if (b.level > table_level_)
                throw DomainError("ball_value: ball level exceeds the table level");
            long stride = pn;
            long total = static_cast<long>(table_.size());
            Rational acc(0);
            for (long x = b.residue; x < total; x += stride) acc += table_[static_cast<size_t>(x)];
            acc.canonicalize();
            return acc;
        }
    }
    throw DomainError("ball_value: unknown kind");
}

Rational Measure::set_value(const ClopenSet& A) const {
    if (A.prime() != p_) throw DomainError("set_value: set lives over a different prime");
    Rational acc(0);
    for (long a : A.residues()) acc += ball_value({a, A.level()});
    acc.canonicalize();
    return acc;
}

PadicNumber Measure::set_value_padic(const ClopenSet& A, int prec) const {
    return PadicNumber::from_rational(set_value(A), q_, prec);
}

NormValue rational_norm(const Rational& x, long q) {
    if (x == 0) return {true, 0};
    return {false, -valuation(x, q)};
}

SeminormEstimate Measure::seminorm(const ClopenSet& A, int depth) const {
    if (kind_ == Kind::haar_distribution)
        throw DomainError("seminorm: unbounded Haar distribution has no finite set norm");
    if (A.prime() != p_) throw DomainError("seminorm: set lives over a different prime");
    int d = std::max(depth, A.level());
    if (kind_ == Kind::table) d = table_level_;  // the atoms decide the sup
    ClopenSet R = A.refined(d);
    NormValue best{true, 0};
    for (long a : R.residues()) {
        NormValue nv = rational_norm(ball_value({a, d}), q_);
        if (nv.zero) continue;
        if (best.zero || nv.exponent > best.exponent) best = nv;
    }
    bool exact = false;
    switch (kind_) {
        case Kind::regularized:
        case Kind::qadic_haar:
            exact = true;  // constant absolute value on every ball
            break;
        case Kind::table:
            exact = true;  // sup over unions of atoms is the atom max
            break;
        default:
            exact = A.is_empty();
            break;
    }
    return {best, d, exact};
}

AdditivityReport Measure::additivity_check(int level) const {
    if (kind_ == Kind::table && level + 1 > table_level_)
        throw DomainError("additivity_check: level+1 exceeds the table level");
    long pn = checked_size(p_, level);
    AdditivityReport rep{true, {}};
    for (long a = 0; a < pn; ++a) {
        Rational parent = ball_value({a, level});
        Rational sum(0);
        for (long j = 0; j < p_; ++j) sum += ball_value({a + j * pn, level + 1});
        sum.canonicalize();
        if (sum != parent) {
            rep.ok = false;
            rep.failing_residues.push_back(a);
        }
    }
    return rep;
}

}  // namespace padic
