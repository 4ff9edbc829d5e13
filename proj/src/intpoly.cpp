#include "tamagawa/intpoly.hpp"

#include <sstream>

namespace tamagawa {

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }
IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, unsigned deg) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::operator[](size_t i) const {
    static const Int zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly{};
    std::vector<Int> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Int(i) * coeffs_[i];
    return IntPoly(std::move(out));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Int IntPoly::fixed_divisor() const {
    if (is_zero()) return 0;
    Int g = 0;
    for (int k = 0; k <= degree() + 1; ++k) {
        Int v = eval(Int(k));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
    std::vector<Int> out = a.coeffs_;
    for (auto& x : out) x *= c;
    return IntPoly(std::move(out));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = (*this)[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(Int(c));
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R
IntPoly prem(const IntPoly& A, const IntPoly& B) {
    int dA = A.degree(), dB = B.degree();
    std::vector<Int> R(A.coeffs());
    const Int& lb = B.leading();
    for (int k = dA; k >= dB; --k) {
        // R = lb*R - R[k]*x^(k-dB)*B
        Int top = R[k];
        for (int i = 0; i <= dA; ++i) {
            R[i] *= lb;
        }
        for (int i = 0; i <= dB; ++i) {
            R[k - dB + i] -= top * B[i];
        }
    }
    R.resize(dB > 0 ? dB : 0);
    return IntPoly(std::move(R));
}

// standard resultant Res(A, B) = lc(A)^deg(B) * prod B(alpha_i) over roots of A
Int res_std(IntPoly A, IntPoly B) {
    if (A.is_zero() || B.is_zero()) throw domain_error("resultant: zero polynomial");
    int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), B.leading().get_mpz_t(), A.degree());
        return sign * r;
    }
    Int g = 1, h = 1;
    while (true) {
        int dA = A.degree(), dB = B.degree();
        unsigned delta = unsigned(dA - dB);
        if ((dA & 1) && (dB & 1)) sign = -sign;
        IntPoly R = prem(A, B);
        A = B;
        // B = R / (g * h^delta), exact division
        Int divisor = g * pow_int(h, delta);
        std::vector<Int> rc = R.coeffs();
        for (auto& c : rc) {
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            c = q;
        }
        B = IntPoly(std::move(rc));
        if (B.is_zero()) return 0;
        g = A.leading();
        // h = h^(1-delta) * g^delta
        if (delta > 0) {
            Int num = pow_int(g, delta);
            Int den = pow_int(h, delta - 1);
            Int q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (B.degree() == 0) {
            // res = sign * B^deg(A) / h^(deg(A)-1)
            Int num = pow_int(B.leading(), A.degree());
            Int den = pow_int(h, A.degree() - 1);
            Int q;
            mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return sign * q;
        }
    }
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    return res_std(g, f);
}

bool has_repeated_root(const IntPoly& f) {
    if (f.degree() < 1) throw domain_error("has_repeated_root: degree >= 1 required");
    if (f.degree() == 1) return false;
    return resultant(f, f.derivative()) == 0;
}

}  // namespace tamagawa
