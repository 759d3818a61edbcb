#include "fg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fg {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) {
    if (c == 0) return;
    Rational q = c;
    q.canonicalize();
    terms_.emplace(Exp{}, q);
}

MultiPoly MultiPoly::var(const std::string& name, int power) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exp{power}, Rational(1));
    p.canonicalize();
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
    std::vector<std::size_t> order(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
    MultiPoly p;
    for (auto i : order) p.vars_.push_back(vars[i]);
    for (std::size_t i = 1; i < p.vars_.size(); ++i)
        if (p.vars_[i] == p.vars_[i - 1]) throw std::invalid_argument("duplicate symbol " + p.vars_[i]);
    for (auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw std::invalid_argument("exponent length mismatch");
        Exp f(e.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (e[order[i]] < 0) throw std::invalid_argument("negative exponent");
            f[i] = e[order[i]];
        }
        p.terms_[f] += c;
    }
    p.canonicalize();
    return p;
}

void MultiPoly::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else {
            it->second.canonicalize();
            ++it;
        }
    }
    std::vector<bool> used(vars_.size(), false);
    for (auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (auto& [e, c] : terms_) {
        Exp f;
        f.reserve(nv.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) f.push_back(e[i]);
        nt.emplace(std::move(f), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

std::vector<std::string> merge_vars(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> out;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(out));
    return out;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        pos[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    MultiPoly p;
    p.vars_ = vars;
    for (auto& [e, c] : terms_) {
        Exp f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
        p.terms_.emplace(std::move(f), c);
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vars_.empty());
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MultiPoly::depends_on(const std::string& v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

int MultiPoly::degree(const std::string& v) const {
    if (terms_.empty()) return -1;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return 0;
    auto i = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coeff(const std::string& v, int d) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return d == 0 ? *this : MultiPoly();
    auto i = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly p;
    p.vars_ = vars_;
    for (auto& [e, c] : terms_) {
        if (e[i] != d) continue;
        Exp f = e;
        f[i] = 0;
        p.terms_.emplace(std::move(f), c);
    }
    p.canonicalize();
    return p;
}

std::vector<MultiPoly> MultiPoly::coeffs(const std::string& v) const {
    int d = degree(v);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)));
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) {
        if (!out.empty()) out[0] = *this;
        return out;
    }
    auto i = static_cast<std::size_t>(it - vars_.begin());
    for (auto& q : out) q.vars_ = vars_;
    for (auto& [e, c] : terms_) {
        Exp f = e;
        f[i] = 0;
        out[static_cast<std::size_t>(e[i])].terms_.emplace(std::move(f), c);
    }
    for (auto& q : out) q.canonicalize();
    return out;
}

MultiPoly MultiPoly::diff(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return {};
    auto i = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly p;
    p.vars_ = vars_;
    for (auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp f = e;
        f[i] -= 1;
        p.terms_[f] += c * e[i];
    }
    p.canonicalize();
    return p;
}

MultiPoly MultiPoly::subs(const std::string& v, const MultiPoly& value) const {
    if (!depends_on(v)) return *this;
    auto cs = coeffs(v);
    MultiPoly out;
    for (std::size_t k = cs.size(); k-- > 0;) {
        out *= value;
        out += cs[k];
    }
    return out;
}

MultiPoly MultiPoly::subs(const std::map<std::string, MultiPoly>& values) const {
    MultiPoly out;
    for (auto& [e, c] : terms_) {
        MultiPoly t(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto f = values.find(vars_[i]);
            t *= (f == values.end() ? var(vars_[i]) : f->second).pow(static_cast<unsigned>(e[i]));
        }
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

MultiPoly MultiPoly::rewrite(const std::string& v, int d, const MultiPoly& value) const {
    MultiPoly p = *this;
    while (p.degree(v) >= d) {
        auto cs = p.coeffs(v);
        MultiPoly low;
        MultiPoly vv = var(v);
        for (int k = d - 1; k >= 0; --k) low = low * vv + cs[static_cast<std::size_t>(k)];
        MultiPoly high;
        for (auto k = static_cast<int>(cs.size()) - 1; k >= d; --k)
            high = high * vv + cs[static_cast<std::size_t>(k)];
        p = low + high * value;
    }
    return p;
}

cplx MultiPoly::eval(const std::map<std::string, cplx>& at) const {
    std::vector<cplx> val(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto f = at.find(vars_[i]);
        if (f == at.end()) throw std::invalid_argument("unbound symbol " + vars_[i]);
        val[i] = f->second;
    }
    cplx s = 0;
    for (auto& [e, c] : terms_) {
        cplx t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= std::pow(val[i], e[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (vars_ != o.vars_) {
        auto v = merge_vars(*this, o);
        *this = with_vars(v);
        MultiPoly oo = o.with_vars(v);
        for (auto& [e, c] : oo.terms_) terms_[e] += c;
    } else {
        for (auto& [e, c] : o.terms_) terms_[e] += c;
    }
    canonicalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    auto v = merge_vars(a, b);
    MultiPoly x = a.with_vars(v), y = b.with_vars(v);
    MultiPoly p;
    p.vars_ = v;
    MultiPoly::Exp f(v.size());
    for (auto& [ea, ca] : x.terms_)
        for (auto& [eb, cb] : y.terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            p.terms_[f] += ca * cb;
        }
    p.canonicalize();
    return p;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("division by zero");
    for (auto& [e, q] : terms_) q /= c;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

namespace {

// display order: descending total degree, then descending exponents
std::vector<std::pair<MultiPoly::Exp, Rational>> display_terms(const MultiPoly& p) {
    std::vector<std::pair<MultiPoly::Exp, Rational>> t(p.terms().begin(), p.terms().end());
    std::stable_sort(t.begin(), t.end(), [](auto& x, auto& y) {
        int sx = 0, sy = 0;
        for (int k : x.first) sx += k;
        for (int k : y.first) sy += k;
        if (sx != sy) return sx > sy;
        return x.first > y.first;
    });
    return t;
}

std::string latex_symbol(const std::string& s) {
    if (s == "l1") return "\\lambda_1";
    if (s == "l2") return "\\lambda_2";
    if (s.size() >= 2 && std::isalpha(static_cast<unsigned char>(s[0])) &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return s.substr(0, 1) + "_" + (s.size() > 2 ? "{" + s.substr(1) + "}" : s.substr(1));
    return s;
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : display_terms(*this)) {
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool mono = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
        bool wrote = false;
        if (!mono || a != 1) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << (wrote ? "*" : "") << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

std::string MultiPoly::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : display_terms(*this)) {
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool mono = std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
        if (!mono || a != 1) {
            if (a.get_den() == 1) os << a.get_num().get_str();
            else os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << latex_symbol(vars_[i]);
            if (e[i] > 1) os << "^{" << e[i] << "}";
        }
        first = false;
    }
    return os.str();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : terms_) terms.push_back({{"exp", e}, {"coef", fg::to_string(c)}});
    return {{"vars", vars_}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    TermMap t;
    for (auto& term : j.at("terms")) {
        auto e = term.at("exp").get<Exp>();
        t[e] += parse_rational(term.at("coef").get<std::string>());
    }
    return from_terms(std::move(vars), std::move(t));
}

MultiPoly poly_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (j.is_number_integer()) return MultiPoly(Rational(j.get<long>()));
    return MultiPoly::from_json(j);
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at " + std::to_string(i) + " in '" + s + "': " + msg);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    MultiPoly expr() {
        MultiPoly a = term();
        for (;;) {
            if (eat('+')) a += term();
            else if (eat('-')) a -= term();
            else return a;
        }
    }
    MultiPoly term() {
        MultiPoly a = unary();
        for (;;) {
            if (eat('*')) {
                a *= unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
                a /= d.constant_value();
            } else {
                return a;
            }
        }
    }
    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    MultiPoly power() {
        MultiPoly a = atom();
        if (eat('^')) {
            ws();
            std::size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (j == i) fail("expected integer exponent");
            a = a.pow(static_cast<unsigned>(std::stoul(s.substr(j, i - j))));
        }
        return a;
    }
    MultiPoly atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            MultiPoly a = expr();
            if (!eat(')')) fail("expected )");
            return a;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return MultiPoly(Rational(Integer(s.substr(j, i - j))));
        }
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            std::size_t j = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            return MultiPoly::var(s.substr(j, i - j));
        }
        fail(std::string("unexpected '") + s[i] + "'");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text) {
    Parser p{text};
    MultiPoly r = p.expr();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------- relations

MultiPoly reduce(const MultiPoly& p, const std::vector<Relation>& rels) {
    MultiPoly q = p;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& r : rels) {
            if (q.degree(r.var) >= r.degree) {
                q = q.rewrite(r.var, r.degree, r.value);
                changed = true;
            }
        }
    }
    return q;
}

Relation weierstrass_relation(const std::string& e) {
    return {e, 3, (parse_poly("g2") * MultiPoly::var(e) + parse_poly("g3")) / Rational(4)};
}

MultiPoly reduce_e(const MultiPoly& p) { return reduce(p, {weierstrass_relation()}); }

MultiPoly express_symmetric(const MultiPoly& p, const std::vector<std::string>& xs,
                            const std::vector<MultiPoly>& elementary) {
    const std::size_t m = xs.size();
    if (elementary.size() != m) throw std::invalid_argument("need one value per elementary function");
    // elementary symmetric polynomials in xs
    std::vector<MultiPoly> E(m + 1);
    E[0] = MultiPoly(1);
    for (std::size_t k = 0; k < m; ++k) {
        MultiPoly x = MultiPoly::var(xs[k]);
        for (std::size_t j = k + 1; j >= 1; --j) E[j] += E[j - 1] * x;
    }
    auto split = [&](const MultiPoly& q) {
        // x-exponent -> coefficient in the other symbols
        std::map<std::vector<int>, MultiPoly> out;
        const auto& vars = q.vars();
        std::vector<int> pos(m, -1);
        for (std::size_t k = 0; k < m; ++k) {
            auto it = std::lower_bound(vars.begin(), vars.end(), xs[k]);
            if (it != vars.end() && *it == xs[k]) pos[k] = static_cast<int>(it - vars.begin());
        }
        for (auto& [e, c] : q.terms()) {
            std::vector<int> xe(m, 0);
            MultiPoly::Exp rest = e;
            for (std::size_t k = 0; k < m; ++k)
                if (pos[k] >= 0) {
                    xe[k] = e[static_cast<std::size_t>(pos[k])];
                    rest[static_cast<std::size_t>(pos[k])] = 0;
                }
            MultiPoly::TermMap t;
            t.emplace(rest, c);
            out[xe] += MultiPoly::from_terms(vars, std::move(t));
        }
        return out;
    };
    MultiPoly rest = p, result;
    for (;;) {
        auto parts = split(rest);
        auto lead = parts.rbegin();
        if (parts.empty() || std::all_of(lead->first.begin(), lead->first.end(), [](int k) { return k == 0; })) {
            if (!parts.empty()) result += lead->second;
            break;
        }
        const auto& a = lead->first;
        for (std::size_t k = 0; k + 1 < m; ++k)
            if (a[k] < a[k + 1]) throw std::invalid_argument("polynomial is not symmetric");
        MultiPoly mono(1), val(1);
        for (std::size_t k = 0; k < m; ++k) {
            int d = a[k] - (k + 1 < m ? a[k + 1] : 0);
            if (!d) continue;
            mono *= E[k + 1].pow(static_cast<unsigned>(d));
            val *= elementary[k].pow(static_cast<unsigned>(d));
        }
        rest -= lead->second * mono;
        result += lead->second * val;
    }
    return result;
}

// ---------------------------------------------------------------- matrices

nlohmann::json PolyMatrix::to_json() const {
    nlohmann::json rowsj = nlohmann::json::array();
    for (int i = 0; i < rows; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (int j = 0; j < cols; ++j) r.push_back((*this)(i, j).to_json());
        rowsj.push_back(r);
    }
    return {{"rows", rows}, {"cols", cols}, {"entries", rowsj}};
}

std::vector<MultiPoly> berkowitz(const PolyMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("charpoly of a non-square matrix");
    const int n = A.rows;
    if (n == 0) return {MultiPoly(1)};
    std::vector<MultiPoly> C = {MultiPoly(1), -A(0, 0)};
    for (int r = 1; r < n; ++r) {
        std::vector<MultiPoly> t(static_cast<std::size_t>(r + 2));
        t[0] = MultiPoly(1);
        t[1] = -A(r, r);
        std::vector<MultiPoly> v(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = A(i, r);
        for (int k = 0; k < r; ++k) {
            MultiPoly s;
            for (int i = 0; i < r; ++i) s += A(r, i) * v[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(k + 2)] = -s;
            if (k + 1 < r) {
                std::vector<MultiPoly> nv(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) nv[static_cast<std::size_t>(i)] += A(i, j) * v[static_cast<std::size_t>(j)];
                v = std::move(nv);
            }
        }
        std::vector<MultiPoly> N(static_cast<std::size_t>(r + 2));
        for (int i = 0; i <= r + 1; ++i)
            for (int j = 0; j <= std::min(i, r); ++j)
                N[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i - j)] * C[static_cast<std::size_t>(j)];
        C = std::move(N);
    }
    return C;
}

MultiPoly charpoly(const PolyMatrix& m, const std::string& var) {
    for (auto& e : m.a)
        if (e.depends_on(var)) throw std::invalid_argument("charpoly symbol occurs in the matrix");
    auto c = berkowitz(m);
    MultiPoly out, x = MultiPoly::var(var);
    for (auto& k : c) out = out * x + k;
    return out;
}

MultiPoly determinant(const PolyMatrix& m) {
    auto c = berkowitz(m);
    return (m.rows % 2 ? -c.back() : c.back());
}

PolyMatrix sylvester(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    int m = p.degree(var), n = q.degree(var);
    if (m <= 0 || n <= 0) throw std::invalid_argument("not bivariate in " + var);
    auto pc = p.coeffs(var), qc = q.coeffs(var);
    PolyMatrix S(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S(i, i + k) = pc[static_cast<std::size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S(n + i, i + k) = qc[static_cast<std::size_t>(n - k)];
    return S;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    return determinant(sylvester(p, q, var));
}

std::vector<MultiPoly> adjugate_column(const PolyMatrix& m, int col) {
    if (m.rows != m.cols) throw std::invalid_argument("adjugate of a non-square matrix");
    const int n = m.rows;
    std::vector<MultiPoly> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = MultiPoly(1);
        return out;
    }
    // adj(M)_{i,col} = (-1)^{i+col} det(M without row col and column i)
    for (int i = 0; i < n; ++i) {
        PolyMatrix minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == col) continue;
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == i) continue;
                minor(rr, cc++) = m(r, c);
            }
            ++rr;
        }
        MultiPoly d = determinant(minor);
        out[static_cast<std::size_t>(i)] = ((i + col) % 2) ? -d : d;
    }
    return out;
}

}  // namespace fg
