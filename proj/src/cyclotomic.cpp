#include "qmk/cyclotomic.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qmk {

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

long lcm_checked(long a, long b) {
    long g = gcd_l(a, b);
    long l = a / g * b;
    long cap = Cyclotomic::order_cap();
    if (l > cap)
        throw Error("cyclotomic order " + std::to_string(l) + " exceeds cap " + std::to_string(cap));
    return l;
}

// quotient of exact division of integer polynomials (ascending coeffs)
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() == 0) throw Error("bad divisor polynomial");
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) throw Error("degree underflow in polynomial division");
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (long i = dn; i >= dd; --i) {
        if (num[i] == 0) continue;
        if (num[i] % den.back() != 0) throw Error("non-exact polynomial division");
        Int q = num[i] / den.back();
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("non-exact polynomial division (remainder)");
    return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
    if (n < 1) throw Error("cyclotomic polynomial needs N >= 1");
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<std::vector<Int>(long)> phi = [&](long m) -> std::vector<Int> {
        auto cit = cache.find(m);
        if (cit != cache.end()) return cit->second;
        // x^m - 1
        std::vector<Int> num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            num = poly_divide_exact(num, phi(d));
        }
        cache[m] = num;
        return num;
    };
    return phi(n);
}

long Cyclotomic::order_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("QMK_CYC_ORDER_CAP")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 720L;
    }();
    return cap;
}

Cyclotomic::Cyclotomic(long order, std::vector<Rat> raw) : order_(order) {
    auto phi = cyclotomic_polynomial(order);
    long deg = static_cast<long>(phi.size()) - 1;
    // remainder of raw modulo the monic Phi_order
    for (long i = static_cast<long>(raw.size()) - 1; i >= deg; --i) {
        if (raw[i] == 0) continue;
        Rat q = raw[i];
        for (long j = 0; j <= deg; ++j) raw[i - deg + j] -= q * Rat(phi[j]);
    }
    raw.resize(deg, Rat(0));
    coeffs_ = std::move(raw);
    while (static_cast<long>(coeffs_.size()) < deg) coeffs_.push_back(Rat(0));
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw Error("root_of_unity needs N >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rat> raw(static_cast<size_t>(k) + 1, Rat(0));
    raw[k] = 1;
    return Cyclotomic(n, std::move(raw));
}

Cyclotomic Cyclotomic::raised_to_order(long m) const {
    if (m % order_ != 0) throw Error("target order must be a multiple of current order");
    if (m == order_) return *this;
    long step = m / order_;
    std::vector<Rat> raw(static_cast<size_t>((coeffs_.size() - 1) * step) + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^(N-k)
    std::vector<Rat> raw(order_, Rat(0));
    raw.resize(std::max<size_t>(order_, coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long e = (order_ - static_cast<long>(i)) % order_;
        raw[e] += coeffs_[i];
    }
    return Cyclotomic(order_, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::as_rational() const {
    if (!is_rational()) throw NotRationalError("cyclotomic value is not rational: " + str());
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = lcm_checked(order_, o.order_);
    Cyclotomic a = raised_to_order(m), b = o.raised_to_order(m);
    std::vector<Rat> raw = a.coeffs_;
    for (size_t i = 0; i < b.coeffs_.size(); ++i) raw[i] += b.coeffs_[i];
    return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rat> raw = coeffs_;
    for (auto& c : raw) c = -c;
    return Cyclotomic(order_, std::move(raw));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = lcm_checked(order_, o.order_);
    Cyclotomic a = raised_to_order(m), b = o.raised_to_order(m);
    std::vector<Rat> raw(a.coeffs_.size() + b.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic(m, std::move(raw));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long m = std::lcm(order_, o.order_);
    Cyclotomic a = raised_to_order(m), b = o.raised_to_order(m);
    return a.coeffs_ == b.coeffs_;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) throw Error("negative exponent");
    Cyclotomic acc(Rat(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool wrote = false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (wrote) os << " + ";
        if (i == 0) {
            os << rat_str(coeffs_[i]);
        } else {
            os << rat_str(coeffs_[i]) << "*z(" << order_ << ")^" << i;
        }
        wrote = true;
    }
    if (!wrote) return "0";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    // formal sum of terms "c" or "c*z(N)^k"; all N must agree
    Cyclotomic acc;
    std::string text = s;
    // split on '+' at top level; leading '-' folded into coefficients
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == '+') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (auto& part : parts) {
        std::string t;
        for (char ch : part)
            if (!isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw ParseError("empty term in cyclotomic literal '" + s + "'");
        auto star = t.find("*z(");
        if (star == std::string::npos) {
            if (t.find("z(") == 0) {
                // bare z(N)^k
                star = std::string::npos;
                t = "1*" + t;
                star = 1;
            } else {
                acc = acc + Cyclotomic(rat_parse(t));
                continue;
            }
        }
        Rat c = rat_parse(t.substr(0, star));
        auto close = t.find(')', star);
        if (close == std::string::npos) throw ParseError("bad cyclotomic term '" + part + "'");
        long n = std::stol(t.substr(star + 3, close - star - 3));
        long k = 1;
        if (close + 1 < t.size()) {
            if (t[close + 1] != '^') throw ParseError("bad cyclotomic term '" + part + "'");
            k = std::stol(t.substr(close + 2));
        }
        acc = acc + Cyclotomic(c) * root_of_unity(n, k);
    }
    return acc;
}

}  // namespace qmk
