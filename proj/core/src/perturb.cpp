#include "qgarnier/perturb.hpp"

#include <atomic>
#include <sstream>
#include <utility>

namespace qgarnier {

namespace {

using Poly = PerturbQ::Poly;

std::atomic<int> g_degree_cap{PerturbQ::kDefaultDegreeCap};

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Polynomial long division a = quot * b + rem; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (deg(a) < deg(b)) return {Poly{}, std::move(a)};
    Poly quot(a.size() - b.size() + 1);
    const ExactQ& lead = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        ExactQ f = a.back() / lead;
        quot[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();  // leading term cancels exactly
        trim(a);
    }
    trim(quot);
    return {std::move(quot), std::move(a)};
}

Poly make_monic(Poly p) {
    if (p.empty()) return p;
    ExactQ lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Poly gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = divmod(std::move(a), b).second;
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

}  // namespace

PerturbQ::PerturbQ(const ExactQ& c) : den_{ExactQ(1)} {
    if (c != 0) num_.push_back(c);
}

PerturbQ PerturbQ::eps() { return linear(ExactQ(0), ExactQ(1)); }

PerturbQ PerturbQ::linear(const ExactQ& c0, const ExactQ& c1) {
    PerturbQ r;
    r.num_ = {c0, c1};
    trim(r.num_);
    return r;
}

PerturbQ PerturbQ::from_polys(Poly num, Poly den) {
    trim(num);
    trim(den);
    if (den.empty()) throw DivisionByZero("zero denominator polynomial");
    PerturbQ r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

int PerturbQ::degree() const { return std::max(deg(num_), deg(den_)); }

int PerturbQ::order(const Poly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

void PerturbQ::normalize() {
    if (num_.empty()) {
        den_ = {ExactQ(1)};
        return;
    }
    if (deg(den_) > 0) {
        Poly g = gcd(num_, den_);
        if (deg(g) > 0) {
            num_ = divmod(std::move(num_), g).first;
            den_ = divmod(std::move(den_), g).first;
        }
    }
    ExactQ lead = den_.back();
    if (lead != 1) {
        for (auto& c : num_) c /= lead;
        for (auto& c : den_) c /= lead;
    }
    const int cap = g_degree_cap.load(std::memory_order_relaxed);
    if (degree() > cap) {
        throw DegreeCapExceeded("degree " + std::to_string(degree()) + " > cap " +
                                std::to_string(cap));
    }
}

PerturbQ& PerturbQ::operator+=(const PerturbQ& o) {
    if (den_ == o.den_) {
        num_ = add(num_, o.num_);
    } else {
        num_ = add(mul(num_, o.den_), mul(o.num_, den_));
        den_ = mul(den_, o.den_);
    }
    normalize();
    return *this;
}

PerturbQ& PerturbQ::operator-=(const PerturbQ& o) {
    if (den_ == o.den_) {
        num_ = sub(num_, o.num_);
    } else {
        num_ = sub(mul(num_, o.den_), mul(o.num_, den_));
        den_ = mul(den_, o.den_);
    }
    normalize();
    return *this;
}

PerturbQ& PerturbQ::operator*=(const PerturbQ& o) {
    num_ = mul(num_, o.num_);
    den_ = mul(den_, o.den_);
    normalize();
    return *this;
}

PerturbQ& PerturbQ::operator/=(const PerturbQ& o) {
    if (o.is_zero()) throw DivisionByZero("perturbation value identically zero");
    num_ = mul(num_, o.den_);
    den_ = mul(den_, o.num_);
    normalize();
    return *this;
}

PerturbQ PerturbQ::operator-() const {
    PerturbQ r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

std::string PerturbQ::str() const {
    auto poly_str = [](const Poly& p) {
        if (p.empty()) return std::string("0");
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << p[i].str() << ")";
            if (i == 1) os << "*eps";
            if (i > 1) os << "*eps^" << i;
        }
        return os.str();
    };
    if (deg(den_) == 0) return poly_str(num_);
    return "[" + poly_str(num_) + "] / [" + poly_str(den_) + "]";
}

int PerturbQ::degree_cap() { return g_degree_cap.load(); }

void PerturbQ::set_degree_cap(int cap) {
    if (cap < 1) throw ConfigError("degree cap must be positive");
    g_degree_cap.store(cap);
}

ExactQ limit_eps0(const PerturbQ& v) {
    if (v.is_zero()) return ExactQ(0);
    const int on = PerturbQ::order(v.num());
    const int od = PerturbQ::order(v.den());
    if (on < od) throw PoleAtZero(v.str());
    if (on > od) return ExactQ(0);
    return v.num()[on] / v.den()[od];
}

}  // namespace qgarnier
