#include "folnerlab/exactla.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "folnerlab/error.hpp"

namespace folnerlab {

// ---- ScalarMatrix -----------------------------------------------------------

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, ScalarMode mode)
    : rows_(rows), mode_(mode), columns_(cols)
{
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, ScalarMode mode)
{
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    ScalarMatrix m(rows.size(), ncols, mode);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw PreconditionError("ragged matrix rows");
        for (std::size_t c = 0; c < ncols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

void ScalarMatrix::set(std::size_t r, std::size_t c, const Scalar& v)
{
    if (r >= rows_ || c >= columns_.size())
        throw PreconditionError("matrix index out of range");
    if (v.mode() != mode_)
        throw ModeMismatch("matrix entry mode differs from matrix mode");
    if (v.is_zero())
        columns_[c].erase(r);
    else
        columns_[c][r] = v;
}

Scalar ScalarMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= columns_.size())
        throw PreconditionError("matrix index out of range");
    const auto& col = columns_[c];
    auto it = col.find(r);
    return it == col.end() ? Scalar::zero(mode_) : it->second;
}

std::size_t ScalarMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& col : columns_)
        n += col.size();
    return n;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& x) const
{
    if (x.size() != cols())
        throw PreconditionError("vector length does not match column count");
    std::vector<Scalar> y(rows_, Scalar::zero(mode_));
    for (std::size_t c = 0; c < cols(); ++c) {
        if (x[c].is_zero())
            continue;
        for (const auto& [r, v] : columns_[c])
            y[r] += v * x[c];
    }
    return y;
}

ScalarMatrix ScalarMatrix::leading_columns(std::size_t count) const
{
    ScalarMatrix out(rows_, std::min(count, cols()), mode_);
    for (std::size_t c = 0; c < out.cols(); ++c)
        out.columns_[c] = columns_[c];
    return out;
}

double ScalarMatrix::frobenius_norm() const
{
    double s = 0;
    for (const auto& col : columns_)
        for (const auto& [r, v] : col)
            s += std::norm(v.to_complex());
    return std::sqrt(s);
}

namespace {

// ---- sparse echelon engine -----------------------------------------------------

template <class Value>
using SparseRow = std::vector<std::pair<std::uint32_t, Value>>;

template <class Policy>
struct Echelon {
    std::vector<SparseRow<typename Policy::Value>> pivot_rows;
    std::vector<std::uint32_t> pivot_cols;
    std::vector<std::uint32_t> free_cols;
    bool complete = true; ///< false when stopped at the first free column
};

/// Column sweep from left to right. Rows are bucketed by leading column; the
/// pivot for a column is the shortest row in its bucket (ties: lowest row id).
template <class Policy>
Echelon<Policy> eliminate(std::vector<SparseRow<typename Policy::Value>> rows, std::size_t ncols,
                          bool stop_at_first_free)
{
    Echelon<Policy> out;
    std::vector<std::vector<std::size_t>> bucket(ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty())
            bucket[rows[i].front().first].push_back(i);

    for (std::size_t c = 0; c < ncols; ++c) {
        auto& b = bucket[c];
        if (b.empty()) {
            out.free_cols.push_back(static_cast<std::uint32_t>(c));
            if (stop_at_first_free) {
                out.complete = c + 1 == ncols;
                return out;
            }
            continue;
        }
        std::size_t pivot = *std::min_element(b.begin(), b.end(), [&](std::size_t x, std::size_t y) {
            return rows[x].size() != rows[y].size() ? rows[x].size() < rows[y].size() : x < y;
        });
        Policy::prepare_pivot(rows[pivot]);
        for (std::size_t i : b) {
            if (i == pivot)
                continue;
            Policy::reduce(rows[i], rows[pivot]);
            if (!rows[i].empty())
                bucket[rows[i].front().first].push_back(i);
        }
        out.pivot_rows.push_back(std::move(rows[pivot]));
        out.pivot_cols.push_back(static_cast<std::uint32_t>(c));
        std::vector<std::size_t>().swap(b);
    }
    return out;
}

/// target <- f_t * target - f_p * pivot, dropping the common leading column.
template <class Value, class Combine>
void merge_rows(SparseRow<Value>& target, const SparseRow<Value>& pivot, Combine combine)
{
    SparseRow<Value> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            Value v = combine(&target[i].second, nullptr);
            if (!Value::is_zero_value(v))
                out.emplace_back(target[i].first, std::move(v));
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            Value v = combine(nullptr, &pivot[j].second);
            if (!Value::is_zero_value(v))
                out.emplace_back(pivot[j].first, std::move(v));
            ++j;
        } else {
            Value v = combine(&target[i].second, &pivot[j].second);
            if (!Value::is_zero_value(v))
                out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

// ---- arithmetic mod p, p = 1 (mod 4) so that Z[i] maps onto F_p --------------------

constexpr std::uint64_t kPrime = 4611686018427387817ULL;
constexpr std::uint64_t kSqrtMinusOne = 120863620846201794ULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b)
{
    return a >= b ? a - b : a + kPrime - b;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a)
{
    return pow_mod(a, kPrime - 2);
}

struct ModValue {
    std::uint64_t v = 0;
    static bool is_zero_value(const ModValue& x) { return x.v == 0; }
};

struct ModPolicy {
    using Value = ModValue;

    static void prepare_pivot(SparseRow<Value>& p)
    {
        std::uint64_t inv = inv_mod(p.front().second.v);
        for (auto& [c, x] : p)
            x.v = mul_mod(x.v, inv);
    }

    static void reduce(SparseRow<Value>& t, const SparseRow<Value>& p)
    {
        std::uint64_t factor = t.front().second.v;
        merge_rows(t, p, [factor](const Value* a, const Value* b) {
            std::uint64_t x = a ? a->v : 0;
            if (b)
                x = sub_mod(x, mul_mod(factor, b->v));
            return Value{x};
        });
    }
};

std::optional<std::uint64_t> rational_mod(const mpq_class& q)
{
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0)
        return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return mul_mod(num, inv_mod(den));
}

std::optional<std::vector<SparseRow<ModValue>>> modular_rows(const ScalarMatrix& m, std::size_t col_limit)
{
    std::vector<SparseRow<ModValue>> rows(m.rows());
    for (std::size_t c = 0; c < col_limit; ++c)
        for (const auto& [r, v] : m.column(c)) {
            const auto& q = v.exact();
            auto re = rational_mod(q.real());
            auto im = rational_mod(q.imag());
            if (!re || !im)
                return std::nullopt;
            std::uint64_t x = add_mod(*re, mul_mod(*im, kSqrtMinusOne));
            if (x != 0)
                rows[r].emplace_back(static_cast<std::uint32_t>(c), ModValue{x});
        }
    return rows;
}

// ---- fraction-free elimination over Z[i] ------------------------------------------

struct GaussInt {
    mpz_class re{0};
    mpz_class im{0};
    static bool is_zero_value(const GaussInt& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
};

GaussInt operator*(const GaussInt& a, const GaussInt& b)
{
    if (sgn(a.im) == 0 && sgn(b.im) == 0)
        return {a.re * b.re, 0};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt operator-(const GaussInt& a, const GaussInt& b)
{
    return {a.re - b.re, a.im - b.im};
}

void remove_content(SparseRow<GaussInt>& row)
{
    mpz_class g = 0;
    for (const auto& [c, x] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.re.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.im.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g <= 1)
        return;
    for (auto& [c, x] : row) {
        mpz_divexact(x.re.get_mpz_t(), x.re.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(x.im.get_mpz_t(), x.im.get_mpz_t(), g.get_mpz_t());
    }
}

struct IntPolicy {
    using Value = GaussInt;

    static void prepare_pivot(SparseRow<Value>&) {}

    static void reduce(SparseRow<Value>& t, const SparseRow<Value>& p)
    {
        GaussInt fp = p.front().second; // multiplies t
        GaussInt ft = t.front().second; // multiplies p
        if (sgn(fp.im) == 0 && sgn(ft.im) == 0) {
            mpz_class g = gcd(fp.re, ft.re);
            mpz_divexact(fp.re.get_mpz_t(), fp.re.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(ft.re.get_mpz_t(), ft.re.get_mpz_t(), g.get_mpz_t());
        }
        merge_rows(t, p, [&](const Value* a, const Value* b) {
            if (a && b)
                return fp * *a - ft * *b;
            if (a)
                return fp * *a;
            return GaussInt{} - ft * *b;
        });
        remove_content(t);
    }
};

std::vector<SparseRow<GaussInt>> integer_rows(const ScalarMatrix& m, std::size_t col_limit)
{
    std::vector<SparseRow<const GaussianRational*>> raw(m.rows());
    for (std::size_t c = 0; c < col_limit; ++c)
        for (const auto& [r, v] : m.column(c))
            raw[r].emplace_back(static_cast<std::uint32_t>(c), &v.exact());

    std::vector<SparseRow<GaussInt>> rows(m.rows());
    for (std::size_t r = 0; r < raw.size(); ++r) {
        mpz_class l = 1;
        for (const auto& [c, q] : raw[r]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->real().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->imag().get_den_mpz_t());
        }
        rows[r].reserve(raw[r].size());
        for (const auto& [c, q] : raw[r]) {
            GaussInt x;
            x.re = l / q->real().get_den() * q->real().get_num();
            x.im = l / q->imag().get_den() * q->imag().get_num();
            rows[r].emplace_back(c, std::move(x));
        }
        remove_content(rows[r]);
    }
    return rows;
}

GaussianRational to_rational(const GaussInt& x)
{
    return GaussianRational(mpq_class(x.re), mpq_class(x.im));
}

/// Kernel vector attached to free column f: x_f = 1, other free coordinates 0.
ScalarVector kernel_vector(const Echelon<IntPolicy>& e, std::size_t ncols, std::uint32_t f)
{
    std::vector<GaussianRational> x(ncols);
    x[f] = GaussianRational(1);
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
        std::uint32_t pc = e.pivot_cols[k];
        if (pc > f)
            continue;
        const auto& row = e.pivot_rows[k];
        GaussianRational s;
        for (std::size_t t = 1; t < row.size(); ++t) {
            const auto& xj = x[row[t].first];
            if (!xj.is_zero())
                s += to_rational(row[t].second) * xj;
        }
        if (!s.is_zero())
            x[pc] = -s / to_rational(row.front().second);
    }
    auto first = std::find_if(x.begin(), x.end(), [](const GaussianRational& v) { return !v.is_zero(); });
    GaussianRational scale = *first;
    ScalarVector out;
    out.reserve(ncols);
    for (auto& v : x)
        out.emplace_back(v.is_zero() ? v : v / scale);
    return out;
}

// ---- floating path ------------------------------------------------------------

Eigen::MatrixXcd to_dense(const ScalarMatrix& m)
{
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) {
            const auto& z = v.floating();
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw PreconditionError("non-finite matrix entry");
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
        }
    return a;
}

void require_tolerance(double tol)
{
    if (!(tol > 0) || !std::isfinite(tol))
        throw PreconditionError("floating rank decisions need a positive tolerance");
}

std::size_t numerical_rank(const Eigen::VectorXd& sv, double tol)
{
    if (sv.size() == 0 || sv(0) == 0.0)
        return 0;
    double threshold = tol * sv(0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold)
            ++r;
    return r;
}

std::vector<ScalarVector> float_nullspace(const ScalarMatrix& m, double tol)
{
    require_tolerance(tol);
    const std::size_t n = m.cols();
    std::vector<ScalarVector> out;
    if (n == 0)
        return out;
    Eigen::MatrixXcd a = to_dense(m);
    std::size_t rank = 0;
    Eigen::MatrixXcd v;
    if (m.rows() == 0) {
        v = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    } else {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
        rank = numerical_rank(svd.singularValues(), tol);
        v = svd.matrixV();
    }
    for (std::size_t k = rank; k < n; ++k) {
        Eigen::VectorXcd col = v.col(static_cast<Eigen::Index>(k));
        double big = col.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < col.size(); ++i)
            if (std::abs(col(i)) > 1e-8 * big) {
                col *= std::conj(col(i)) / std::abs(col(i));
                break;
            }
        col.normalize();
        ScalarVector vec;
        vec.reserve(n);
        for (Eigen::Index i = 0; i < col.size(); ++i)
            vec.emplace_back(Complex(col(i)));
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace

RankNullity rank_nullity(const ScalarMatrix& m, double tol)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (m.mode() == ScalarMode::floating)
        require_tolerance(tol);
    if (rows == 0 || cols == 0 || m.nonzeros() == 0)
        return {0, cols};
    if (m.mode() == ScalarMode::floating) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(to_dense(m));
        std::size_t r = numerical_rank(svd.singularValues(), tol);
        return {r, cols - r};
    }
    // rank mod p never exceeds the rank over Q(i), so a full modular rank is a certificate
    if (auto mod = modular_rows(m, cols)) {
        auto e = eliminate<ModPolicy>(std::move(*mod), cols, false);
        if (e.pivot_cols.size() == std::min(rows, cols))
            return {e.pivot_cols.size(), cols - e.pivot_cols.size()};
    }
    auto e = eliminate<IntPolicy>(integer_rows(m, cols), cols, false);
    return {e.pivot_cols.size(), cols - e.pivot_cols.size()};
}

std::vector<ScalarVector> nullspace_basis(const ScalarMatrix& m, double tol)
{
    if (m.mode() == ScalarMode::floating)
        return float_nullspace(m, tol);
    const std::size_t cols = m.cols();
    if (auto mod = modular_rows(m, cols)) {
        auto e = eliminate<ModPolicy>(std::move(*mod), cols, false);
        if (e.pivot_cols.size() == cols)
            return {};
    }
    auto e = eliminate<IntPolicy>(integer_rows(m, cols), cols, false);
    std::vector<ScalarVector> out;
    for (auto f : e.free_cols)
        out.push_back(kernel_vector(e, cols, f));
    return out;
}

std::optional<ScalarVector> first_kernel_vector(const ScalarMatrix& m, double tol)
{
    if (m.mode() == ScalarMode::floating) {
        auto basis = float_nullspace(m, tol);
        if (basis.empty())
            return std::nullopt;
        return basis.front();
    }
    const std::size_t cols = m.cols();
    auto exact_first = [&](std::size_t limit) -> std::optional<ScalarVector> {
        auto e = eliminate<IntPolicy>(integer_rows(m, limit), limit, true);
        if (e.free_cols.empty())
            return std::nullopt;
        ScalarVector v = kernel_vector(e, limit, e.free_cols.front());
        v.resize(cols, Scalar::zero(ScalarMode::exact));
        return v;
    };
    if (auto mod = modular_rows(m, cols)) {
        auto e = eliminate<ModPolicy>(std::move(*mod), cols, true);
        if (e.free_cols.empty())
            return std::nullopt;
        // exact prefix rank is at least the modular one, so the exact first free
        // column is at or after the modular one; try the short prefix first
        if (auto v = exact_first(e.free_cols.front() + 1))
            return v;
    }
    return exact_first(cols);
}

bool is_kernel_vector(const ScalarMatrix& m, const ScalarVector& v, double tol)
{
    auto y = m.apply(v);
    if (m.mode() == ScalarMode::exact)
        return std::all_of(y.begin(), y.end(), [](const Scalar& s) { return s.is_zero(); });
    double ny = 0;
    for (const auto& s : y)
        ny += std::norm(s.to_complex());
    double nv = 0;
    for (const auto& s : v)
        nv += std::norm(s.to_complex());
    return std::sqrt(ny) <= tol * m.frobenius_norm() * std::sqrt(nv) + 1e-300;
}

Eigen::MatrixXcd to_dense_complex(const ScalarMatrix& m)
{
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c))
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.to_complex();
    return a;
}

} // namespace folnerlab
