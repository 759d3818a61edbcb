#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fg/theta.hpp"

namespace fg {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Rational parse_char_entry(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw std::invalid_argument("empty characteristic entry");
    if (s.find('.') != std::string::npos) {
        double d = std::stod(s);
        Rational q(d);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad characteristic entry '" + s + "'");
    q.canonicalize();
    return q;
}

Rational frac(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - f;
}

}  // namespace

void validate_siegel(const CMatrix& tau) {
    if (tau.rows() != tau.cols() || tau.rows() == 0) throw std::invalid_argument("tau must be square");
    const double scale = std::max(1.0, tau.cwiseAbs().maxCoeff());
    if ((tau - tau.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw std::invalid_argument("tau is not symmetric");
    Eigen::MatrixXd Y = tau.imag();
    Y = (Y + Y.transpose()) / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Y);
    if (es.eigenvalues().minCoeff() <= 0) throw std::invalid_argument("Im tau is not positive definite");
}

ThetaChar ThetaChar::zero(int g) {
    return ThetaChar{std::vector<Rational>(static_cast<std::size_t>(g), 0),
                     std::vector<Rational>(static_cast<std::size_t>(g), 0)};
}

ThetaChar ThetaChar::parse(const std::string& s) {
    auto halves = split(s, ';');
    if (halves.size() != 2) throw std::invalid_argument("characteristic must look like 'a1,a2;b1,b2'");
    ThetaChar c;
    for (auto& t : split(halves[0], ',')) c.a.push_back(parse_char_entry(t));
    for (auto& t : split(halves[1], ',')) c.b.push_back(parse_char_entry(t));
    if (c.a.size() != c.b.size()) throw std::invalid_argument("characteristic halves differ in length");
    return c;
}

std::pair<ThetaChar, cplx> ThetaChar::reduced() const {
    ThetaChar r = *this;
    double phase = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.a[i] = frac(a[i]);
        r.b[i] = frac(b[i]);
        Rational l = b[i] - r.b[i];
        phase += Rational(r.a[i] * l).get_d();
    }
    return {r, std::polar(1.0, 2 * pi * phase)};
}

std::string ThetaChar::str() const {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
    s += ";";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i].get_str();
    return s;
}

int theta_radius(const Eigen::VectorXcd& v, const CMatrix& tau, double eps) {
    Eigen::MatrixXd Y = tau.imag();
    Y = (Y + Y.transpose()) / 2;
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Y).eigenvalues().minCoeff();
    (void)v;
    const double L = std::log(1 / std::max(eps, 1e-300)) + 3.0 * static_cast<double>(tau.rows());
    return static_cast<int>(std::ceil(std::sqrt(L / (pi * lmin)))) + 1;
}

cplx theta(const Eigen::VectorXcd& v, const CMatrix& tau, const ThetaChar& ch, double eps, Exec ex) {
    validate_siegel(tau);
    const int g = static_cast<int>(tau.rows());
    if (v.size() != g || static_cast<int>(ch.a.size()) != g || static_cast<int>(ch.b.size()) != g)
        throw std::invalid_argument("theta: dimension mismatch");
    if (g > 4) throw std::invalid_argument("theta: genus above 4 is not supported");
    const CMatrix T = (tau + tau.transpose()) / 2.0;
    Eigen::VectorXd a(g);
    Eigen::VectorXcd vb(g);
    for (int i = 0; i < g; ++i) {
        a(i) = ch.a[static_cast<std::size_t>(i)].get_d();
        vb(i) = v(i) + ch.b[static_cast<std::size_t>(i)].get_d();
    }
    // the summand modulus peaks at m* = -Y^-1 Im v, with m = n + a
    Eigen::MatrixXd Y = T.imag();
    Eigen::VectorXd mstar = -Y.ldlt().solve(v.imag());
    const int R = theta_radius(v, tau, eps);
    std::vector<long> lo(static_cast<std::size_t>(g));
    long count = 1;
    for (int i = 0; i < g; ++i) {
        lo[static_cast<std::size_t>(i)] = std::lround(mstar(i) - a(i)) - R;
        count *= 2 * R + 1;
    }
    const long width = 2 * R + 1;
    const long inner = count / width;
    std::vector<cplx> partial(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(static) if (ex == Exec::parallel)
    for (long i0 = 0; i0 < width; ++i0) {
        Eigen::VectorXd m(g);
        cplx s = 0;
        for (long r = 0; r < inner; ++r) {
            long idx = r;
            m(0) = static_cast<double>(lo[0] + i0) + a(0);
            for (int j = 1; j < g; ++j) {
                m(j) = static_cast<double>(lo[static_cast<std::size_t>(j)] + idx % width) + a(j);
                idx /= width;
            }
            const Eigen::VectorXcd mc = m.cast<cplx>();
            cplx q = (mc.transpose() * T * mc).value();
            cplx l = (mc.transpose() * vb).value();
            s += std::exp(I * pi * q + 2.0 * pi * I * l);
        }
        partial[static_cast<std::size_t>(i0)] = s;
    }
    cplx total = 0;
    for (auto p : partial) total += p;
    return total;
}

std::array<cplx, 4> jacobi_thetas(cplx v, cplx tau, double eps) {
    Eigen::VectorXcd vv(1);
    vv(0) = v;
    CMatrix t(1, 1);
    t(0, 0) = tau;
    const Rational h(1, 2);
    auto th = [&](Rational a, Rational b) { return theta(vv, t, ThetaChar{{a}, {b}}, eps, Exec::serial); };
    return {-th(h, h), th(h, 0), th(0, 0), th(0, h)};
}

}  // namespace fg
