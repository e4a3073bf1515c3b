#include "mcq/exact.hpp"

#include <sstream>

namespace mcq {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (!b.is_zero()) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int int_pow(const Int& b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

QPoly::QPoly(long c) {
    if (c != 0) coeffs_[0] = c;
}

QPoly::QPoly(Int c) {
    if (!c.is_zero()) coeffs_[0] = std::move(c);
}

QPoly QPoly::monomial(int exp, Int c) {
    QPoly p;
    if (!c.is_zero()) p.coeffs_[exp] = std::move(c);
    return p;
}

bool QPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int QPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Int QPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int QPoly::leading_coeff() const {
    return coeffs_.empty() ? Int(0) : coeffs_.rbegin()->second;
}

void QPoly::set(int exp, Int c) {
    if (c.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = std::move(c);
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            Int& slot = r.coeffs_[ea + eb];
            slot += ca * cb;
        }
    std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw identity_error("QPoly: division by zero polynomial");
    QPoly rem = *this;
    QPoly quot;
    const int dd = d.degree();
    const Int& lc = d.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.degree() >= dd) {
        Int c = rem.leading_coeff();
        if (c % lc != 0)
            throw identity_error("QPoly: non-exact division (leading coefficient)");
        Int f = c / lc;
        int e = rem.degree() - dd;
        quot.set(e, quot.coeff(e) + f);
        rem -= QPoly::monomial(e, f) * d;
    }
    if (!rem.is_zero()) throw identity_error("QPoly: non-exact division (remainder)");
    return quot;
}

Int QPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : coeffs_) g = int_gcd(g, c);
    if (!coeffs_.empty() && leading_coeff() < 0) g = -g;
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    QPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c / g;
    return r;
}

Int QPoly::eval_int(const Int& q) const {
    Int r = 0;
    for (const auto& [e, c] : coeffs_) r += c * int_pow(q, e);
    return r;
}

QPoly QPoly::reverse(int d) const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) {
        if (e > d) throw identity_error("QPoly::reverse: degree exceeds window");
        r.coeffs_[d - e] = c;
    }
    return r;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) os << a.str();
        if (e >= 1) {
            os << "q";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // primitive pseudo-remainder sequence
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        QPoly rem = a;
        int db = b.degree();
        Int lcb = b.leading_coeff();
        while (!rem.is_zero() && rem.degree() >= db) {
            int e = rem.degree() - db;
            Int lcr = rem.leading_coeff();
            // scale rem so leading terms cancel exactly
            QPoly scaled;
            for (const auto& [ee, cc] : rem.coeffs()) scaled.set(ee, cc * lcb);
            scaled -= QPoly::monomial(e, lcr) * b;
            rem = scaled;
        }
        a = b;
        b = rem.is_zero() ? QPoly() : rem.primitive_part();
    }
    return a.primitive_part();
}

LaurentQT::LaurentQT(long c) {
    if (c != 0) coeffs_[0] = QPoly(c);
}

LaurentQT::LaurentQT(const QPoly& c) {
    if (!c.is_zero()) coeffs_[0] = c;
}

LaurentQT LaurentQT::monomial(int t_exp, QPoly c) {
    LaurentQT r;
    if (!c.is_zero()) r.coeffs_[t_exp] = std::move(c);
    return r;
}

QPoly LaurentQT::coeff(int t_exp) const {
    auto it = coeffs_.find(t_exp);
    return it == coeffs_.end() ? QPoly() : it->second;
}

int LaurentQT::min_t() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentQT::max_t() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void LaurentQT::set(int t_exp, QPoly c) {
    if (c.is_zero())
        coeffs_.erase(t_exp);
    else
        coeffs_[t_exp] = std::move(c);
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
    LaurentQT r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.coeffs_[ea + eb] += ca * cb;
    std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

QPoly LaurentQT::eval_t(const QPoly& t) const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) {
        if (e < 0) throw identity_error("LaurentQT::eval_t on negative t-exponent");
        QPoly p = 1;
        for (int i = 0; i < e; ++i) p *= t;
        r += c * p;
    }
    return r;
}

QPoly LaurentQT::eval_t_minus_one() const {
    QPoly r;
    for (const auto& [e, c] : coeffs_) {
        // (-1)^e with e possibly negative
        bool odd = (e % 2) != 0;
        r += odd ? -c : c;
    }
    return r;
}

LaurentQT LaurentQT::shift_t(int k) const {
    LaurentQT r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentQT LaurentQT::reverse_t(int d) const {
    LaurentQT r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[d - e] = c;
    return r;
}

bool LaurentQT::palindromic_t(int d) const { return *this == reverse_t(d); }

Int LaurentQT::eval_t1_q1() const {
    Int r = 0;
    for (const auto& [e, c] : coeffs_) r += c.eval_one();
    return r;
}

std::string LaurentQT::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        std::string cs = c.str();
        bool neg = cs.front() == '-';
        if (neg) cs.erase(0, 1);
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? "-" : "+");
        first = false;
        if (e == 0) {
            os << cs;
        } else {
            if (composite)
                os << "(" << cs << ")";
            else if (cs != "1")
                os << cs;
            os << "t";
            if (e != 1) {
                if (e >= 0)
                    os << "^" << e;
                else
                    os << "^{" << e << "}";
            }
        }
    }
    return os.str();
}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw identity_error("QFrac: zero denominator");
    reduce();
}

void QFrac::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Int g2 = int_gcd(num_.content(), den_.content());
    if (den_.leading_coeff() < 0) g2 = -g2;
    if (g2 != 1) {
        num_ = num_.divide_exact(QPoly(g2));
        den_ = den_.divide_exact(QPoly(g2));
    }
}

QFrac operator+(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator-(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator*(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.num_, a.den_ * b.den_);
}

QFrac operator/(const QFrac& a, const QFrac& b) {
    if (b.is_zero()) throw identity_error("QFrac: division by zero");
    return QFrac(a.num_ * b.den_, a.den_ * b.num_);
}

QFrac QFrac::operator-() const {
    QFrac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    QPoly p;
    for (int i = 0; i < n; ++i) p.set(i, 1);
    return p;
}

QPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QPoly p = 1;
    for (int i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

QPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

QPoly q_multinomial(const std::vector<int>& parts) {
    int n = 0;
    QPoly den = 1;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        n += p;
        den *= q_factorial(p);
    }
    return q_factorial(n).divide_exact(den);
}

QFrac det_qfrac(std::vector<std::vector<QFrac>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_qfrac: matrix not square");
    QFrac det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return QFrac(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        QFrac inv = QFrac(1) / m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            QFrac f = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return det;
}

}  // namespace mcq
