#include "avdyn/lattice_av.hpp"

#include <algorithm>
#include <sstream>

#include "avdyn/errors.hpp"

namespace avdyn {

ComplexTorus::ComplexTorus(std::size_t g, std::optional<RationalMatrix> complex_structure,
                           std::optional<IntegerMatrix> riemann_form)
    : g_(g), J_(std::move(complex_structure)), S_(std::move(riemann_form))
{
    if (g == 0)
        throw ValidationError("torus: dimension g must be positive");
    const std::size_t n = 2 * g;
    if (J_) {
        if (J_->rows() != n || J_->cols() != n)
            throw ValidationError("torus: complex structure must be " + std::to_string(n) + "x" + std::to_string(n));
        if (*J_ * *J_ != RationalMatrix::identity(n) * Rational(-1))
            throw ValidationError("torus: complex structure does not satisfy J^2 = -I");
    }
    if (S_) {
        if (S_->rows() != n || S_->cols() != n)
            throw ValidationError("torus: Riemann form must be " + std::to_string(n) + "x" + std::to_string(n));
        if (!S_->is_skew_symmetric())
            throw ValidationError("torus: Riemann form is not alternating");
        if (det(*S_) == 0)
            throw ValidationError("torus: Riemann form is degenerate");
    }
    if (J_ && S_) {
        RationalMatrix S(*S_);
        RationalMatrix Jt = J_->transpose();
        if (Jt * S * *J_ != S)
            throw ValidationError("torus: Riemann form is not J-invariant");
        if (!is_positive_definite(Jt * S))
            throw ValidationError("torus: J^t S is not symmetric positive definite");
    }
}

ComplexTorus ComplexTorus::standard(std::size_t g)
{
    // With S = [[0,1],[-1,0]] per factor, J = [[0,1],[-1,0]] makes J^t S = I.
    RationalMatrix J(2 * g, 2 * g);
    for (std::size_t k = 0; k < g; ++k) {
        J(2 * k, 2 * k + 1) = 1;
        J(2 * k + 1, 2 * k) = -1;
    }
    return ComplexTorus(g, J, IntegerMatrix::standard_symplectic(g));
}

TorsionPoint::TorsionPoint(RationalVector coordinates) : coords_(reduce_mod_one(std::move(coordinates))) {}

bool TorsionPoint::operator<(const TorsionPoint& o) const
{
    return std::lexicographical_compare(coords_.begin(), coords_.end(), o.coords_.begin(), o.coords_.end());
}

std::string TorsionPoint::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i].get_str();
    os << ')';
    return os.str();
}

LatticeEndomorphism::LatticeEndomorphism(IntegerMatrix matrix)
    : LatticeEndomorphism(matrix, RationalVector(matrix.rows()))
{
}

LatticeEndomorphism::LatticeEndomorphism(IntegerMatrix matrix, RationalVector translation)
    : M_(std::move(matrix)), t_(reduce_mod_one(std::move(translation)))
{
    if (!M_.is_square() || M_.rows() % 2 != 0)
        throw ValidationError("endomorphism: matrix must be square of even size 2g");
    if (t_.size() != M_.rows())
        throw ValidationError("endomorphism: translation has length " + std::to_string(t_.size()) +
                              ", expected " + std::to_string(M_.rows()));
}

LatticeEndomorphism LatticeEndomorphism::identity(std::size_t rank)
{
    return LatticeEndomorphism(IntegerMatrix::identity(rank));
}

LatticeEndomorphism LatticeEndomorphism::multiplication(std::size_t rank, const Integer& m)
{
    return LatticeEndomorphism(IntegerMatrix::scalar(rank, m));
}

bool LatticeEndomorphism::is_translation_free() const
{
    return std::all_of(t_.begin(), t_.end(), [](const Rational& x) { return x == 0; });
}

RationalVector LatticeEndomorphism::apply(const RationalVector& x) const
{
    RationalVector y = M_ * x;
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += t_[i];
    return reduce_mod_one(std::move(y));
}

TorsionPoint LatticeEndomorphism::apply(const TorsionPoint& p) const { return TorsionPoint(apply(p.coordinates())); }

SimpleFactorSpec::SimpleFactorSpec(std::size_t g_, Integer q_, std::size_t r) : g(g_), q(std::move(q_)), multiplicity(r)
{
    if (g == 0)
        throw ValidationError("factor: dimension must be >= 1");
    if (q < 2)
        throw ValidationError("factor: polarization multiplier must be >= 2");
    if (multiplicity == 0)
        throw ValidationError("factor: multiplicity must be >= 1");
}

LatticeEndomorphism compose(const LatticeEndomorphism& f, const LatticeEndomorphism& h)
{
    if (f.rank() != h.rank())
        throw ValidationError("compose: endomorphisms act on lattices of different rank");
    RationalVector t = f.matrix() * h.translation();
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] += f.translation()[i];
    return LatticeEndomorphism(f.matrix() * h.matrix(), std::move(t));
}

LatticeEndomorphism power(const LatticeEndomorphism& f, unsigned long l)
{
    if (l == 0)
        throw ValidationError("power: exponent must be >= 1 (use LatticeEndomorphism::identity)");
    // t_{k+1} = M t_k + t, reduced each step so entries stay small.
    RationalVector acc = f.translation();
    for (unsigned long k = 1; k < l; ++k) {
        acc = f.matrix() * acc;
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += f.translation()[i];
        acc = reduce_mod_one(std::move(acc));
    }
    return LatticeEndomorphism(matrix_power(f.matrix(), l), std::move(acc));
}

Integer degree(const LatticeEndomorphism& f) { return abs(det(f.matrix())); }

bool is_holomorphic(const LatticeEndomorphism& f, const ComplexTorus& torus)
{
    if (f.rank() != torus.rank())
        throw ValidationError("endomorphism rank does not match torus rank");
    if (!torus.complex_structure())
        return true;
    const RationalMatrix M(f.matrix());
    const RationalMatrix& J = *torus.complex_structure();
    return M * J == J * M;
}

ComplementaryIsogeny complementary_isogeny(const LatticeEndomorphism& f)
{
    if (!f.is_translation_free())
        throw ValidationError("complementary_isogeny: endomorphism has a nonzero translation");
    const auto snf = smith_normal_form(f.matrix());
    const Integer m = snf.elementary_divisors.back();
    if (m == 0)
        throw DegenerateError("complementary_isogeny: matrix is singular (degree 0)");
    // m is the exponent of the kernel, so m M^{-1} is integral.
    const IntegerMatrix dual = (inverse(RationalMatrix(f.matrix())) * Rational(m)).to_integer();
    return {LatticeEndomorphism(dual), m};
}

std::optional<Integer> polarization_multiplier(const LatticeEndomorphism& f, const ComplexTorus& torus)
{
    if (!torus.riemann_form())
        throw ValidationError("polarization_multiplier: torus has no Riemann form");
    if (f.rank() != torus.rank())
        throw ValidationError("polarization_multiplier: rank mismatch");
    const IntegerMatrix& S = *torus.riemann_form();
    const IntegerMatrix pulled = f.matrix().transpose() * S * f.matrix();
    std::optional<Integer> q;
    for (std::size_t i = 0; i < S.rows() && !q; ++i)
        for (std::size_t j = 0; j < S.cols(); ++j)
            if (S(i, j) != 0) {
                if (mpz_divisible_p(pulled(i, j).get_mpz_t(), S(i, j).get_mpz_t()) == 0)
                    return std::nullopt;
                q = Integer(pulled(i, j) / S(i, j));
                break;
            }
    if (!q || *q < 1 || pulled != S * *q)
        return std::nullopt;
    return q;
}

std::pair<ComplexTorus, LatticeEndomorphism> product(const std::vector<ComplexTorus>& tori,
                                                     const std::vector<LatticeEndomorphism>& endos)
{
    if (tori.empty())
        throw ValidationError("product: no factors given");
    if (tori.size() != endos.size())
        throw ValidationError("product: torus and endomorphism lists differ in length");

    std::size_t g = 0;
    bool all_J = true, all_S = true;
    std::vector<IntegerMatrix> Ms, Ss;
    RationalVector t;
    for (std::size_t k = 0; k < tori.size(); ++k) {
        if (endos[k].rank() != tori[k].rank())
            throw ValidationError("product: factor " + std::to_string(k) + " rank mismatch");
        g += tori[k].half_dimension();
        all_J = all_J && tori[k].complex_structure().has_value();
        all_S = all_S && tori[k].riemann_form().has_value();
        Ms.push_back(endos[k].matrix());
        if (tori[k].riemann_form())
            Ss.push_back(*tori[k].riemann_form());
        t.insert(t.end(), endos[k].translation().begin(), endos[k].translation().end());
    }

    std::optional<RationalMatrix> J;
    if (all_J) {
        RationalMatrix big(2 * g, 2 * g);
        std::size_t off = 0;
        for (const auto& T : tori) {
            const auto& b = *T.complex_structure();
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    big(off + i, off + j) = b(i, j);
            off += b.rows();
        }
        J = big;
    }
    std::optional<IntegerMatrix> S;
    if (all_S)
        S = IntegerMatrix::block_diagonal(Ss);
    return {ComplexTorus(g, J, S), LatticeEndomorphism(IntegerMatrix::block_diagonal(Ms), t)};
}

void require_saturated(const IntegerMatrix& basis)
{
    if (basis.cols() % 2 != 0 || basis.cols() > basis.rows())
        throw ValidationError("sublattice basis must have an even number 2r <= 2g of columns");
    const auto snf = smith_normal_form(basis);
    for (const auto& d : snf.elementary_divisors) {
        if (d == 0)
            throw ValidationError("sublattice basis does not have full column rank");
        if (d != 1)
            throw ValidationError("sublattice basis is not saturated (elementary divisor " + d.get_str() + ")");
    }
}

IntegerMatrix left_inverse(const IntegerMatrix& basis)
{
    require_saturated(basis);
    // U B V = [I; 0]  =>  (V [I 0] U) B = I.
    const auto snf = smith_normal_form(basis);
    const std::size_t r = basis.cols();
    IntegerMatrix top(r, basis.rows());
    for (std::size_t i = 0; i < r; ++i)
        top(i, i) = 1;
    return snf.V * top * snf.U;
}

LatticeEndomorphism restrict_to_sublattice(const LatticeEndomorphism& f, const IntegerMatrix& basis)
{
    if (basis.rows() != f.rank())
        throw ValidationError("restrict_to_sublattice: basis has " + std::to_string(basis.rows()) +
                              " rows, expected " + std::to_string(f.rank()));
    const IntegerMatrix P = left_inverse(basis);
    const IntegerMatrix restricted = P * f.matrix() * basis;
    if (basis * restricted != f.matrix() * basis)
        throw ValidationError("restrict_to_sublattice: sublattice is not invariant under the endomorphism");

    RationalVector t_sub = P * f.translation();
    RationalVector back = basis * t_sub;
    for (std::size_t i = 0; i < back.size(); ++i)
        back[i] -= f.translation()[i];
    if (!is_integral(back))
        throw ValidationError("restrict_to_sublattice: translation does not lie on the subtorus");
    return LatticeEndomorphism(restricted, std::move(t_sub));
}

ComplexTorus restrict_torus(const ComplexTorus& torus, const IntegerMatrix& basis)
{
    if (basis.rows() != torus.rank())
        throw ValidationError("restrict_torus: basis row count does not match torus rank");
    const IntegerMatrix P = left_inverse(basis);
    std::optional<RationalMatrix> J;
    if (torus.complex_structure()) {
        const RationalMatrix B(basis);
        RationalMatrix Jr = RationalMatrix(P) * *torus.complex_structure() * B;
        if (B * Jr == *torus.complex_structure() * B)
            J = Jr;
    }
    std::optional<IntegerMatrix> S;
    if (torus.riemann_form())
        S = basis.transpose() * *torus.riemann_form() * basis;
    return ComplexTorus(basis.cols() / 2, J, S);
}

} // namespace avdyn
