#include "iyb/zmat.hpp"

#include <sstream>
#include <stdexcept>

namespace iyb {

IntMat::IntMat(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols) throw std::invalid_argument("IntMat: entry count mismatch");
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("IntMat: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMat: size mismatch in product");
    IntMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMat: size mismatch in sum");
    IntMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("IntMat: size mismatch in difference");
    IntMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

bool IntMat::operator<(const IntMat& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
    return a_ < rhs.a_;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat: vector size mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMat::add_col_multiple(int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMat::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? "," : "");
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithForm::diagonal() const {
    int n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

// Smallest absolute nonzero entry with i, j >= t; row-major tie-break.
bool find_pivot(const IntMat& d, int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
    const int m = a.rows(), n = a.cols();
    SmithForm s{IntMat::identity(m), a, IntMat::identity(n)};
    IntMat& d = s.d;
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            int pi = 0, pj = 0;
            if (!find_pivot(d, t, pi, pj)) return s;  // rest of the matrix is zero
            d.swap_rows(t, pi);
            s.u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            s.v.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);  // truncated: remainder smaller in abs value
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                s.v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility sweep: pull the first non-multiple into row t
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            d.add_row_multiple(t, bi, 1);
            s.u.add_row_multiple(t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

Int determinant(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    int n = a.rows();
    if (n == 0) return 1;
    IntMat w = a;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            w.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

IntMat lattice_canonical_basis(const IntMat& gens) {
    const int n = gens.rows();
    IntMat w = gens;
    int rank = 0;
    for (int i = 0; i < n && rank < w.cols(); ++i) {
        // reduce row i across columns >= rank to a single nonzero pivot
        for (;;) {
            int best = -1;
            Int bestAbs;
            for (int j = rank; j < w.cols(); ++j) {
                if (w.at(i, j) == 0) continue;
                Int ax = abs(w.at(i, j));
                if (best < 0 || ax < bestAbs) {
                    best = j;
                    bestAbs = ax;
                }
            }
            if (best < 0) break;
            w.swap_cols(rank, best);
            bool done = true;
            for (int j = rank + 1; j < w.cols(); ++j) {
                if (w.at(i, j) == 0) continue;
                Int q = w.at(i, j) / w.at(i, rank);
                w.add_col_multiple(j, rank, -q);
                if (w.at(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (w.at(i, rank) == 0) continue;
        if (w.at(i, rank) < 0)
            for (int k = 0; k < n; ++k) w.at(k, rank) = -w.at(k, rank);
        for (int j = 0; j < rank; ++j) {
            Int q = floor_div(w.at(i, j), w.at(i, rank));
            w.add_col_multiple(j, rank, -q);
        }
        ++rank;
    }
    IntMat out(n, rank);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j) out.at(i, j) = w.at(i, j);
    return out;
}

std::optional<ModularSolution> solve_modular(const IntMat& a, const std::vector<Int>& b,
                                             const std::vector<Int>& moduli) {
    const int r = a.rows(), c = a.cols();
    if (static_cast<int>(b.size()) != r || static_cast<int>(moduli.size()) != r)
        throw std::invalid_argument("solve_modular: dimension mismatch");

    // append one modulus column per torsion row
    std::vector<int> tor_rows;
    for (int i = 0; i < r; ++i)
        if (moduli[i] != 0) tor_rows.push_back(i);
    const int cc = c + static_cast<int>(tor_rows.size());
    IntMat ext(r, cc);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) ext.at(i, j) = a.at(i, j);
    for (size_t k = 0; k < tor_rows.size(); ++k) ext.at(tor_rows[k], c + static_cast<int>(k)) = moduli[tor_rows[k]];

    SmithForm s = smith_normal_form(ext);
    std::vector<Int> rhs = s.u.mul_vec(b);

    const int rank_bound = std::min(r, cc);
    std::vector<Int> w(cc, Int(0));
    std::vector<int> free_cols;
    for (int k = 0; k < cc; ++k) {
        if (k < rank_bound && s.d.at(k, k) != 0) {
            if (rhs[k] % s.d.at(k, k) != 0) return std::nullopt;
            w[k] = rhs[k] / s.d.at(k, k);
        } else {
            free_cols.push_back(k);
        }
    }
    for (int k = cc; k < r; ++k)
        if (rhs[k] != 0) return std::nullopt;
    for (int k : free_cols)
        if (k < r && rhs[k] != 0) return std::nullopt;

    std::vector<Int> z = s.v.mul_vec(w);
    ModularSolution sol;
    sol.particular.assign(z.begin(), z.begin() + c);

    if (!free_cols.empty() && c > 0) {
        IntMat raw(c, static_cast<int>(free_cols.size()));
        for (size_t j = 0; j < free_cols.size(); ++j)
            for (int i = 0; i < c; ++i) raw.at(i, static_cast<int>(j)) = s.v.at(i, free_cols[j]);
        IntMat basis = lattice_canonical_basis(raw);
        for (int j = 0; j < basis.cols(); ++j) sol.homogeneous.push_back(basis.col(j));
    }
    return sol;
}

ExactSolver::ExactSolver(const IntMat& b) : snf_(smith_normal_form(b)), rows_(b.rows()), cols_(b.cols()) {}

std::optional<std::vector<Int>> ExactSolver::solve(const std::vector<Int>& rhs) const {
    std::vector<Int> c = snf_.u.mul_vec(rhs);
    std::vector<Int> w(cols_, Int(0));
    int rb = std::min(rows_, cols_);
    for (int k = 0; k < rows_; ++k) {
        if (k < rb && snf_.d.at(k, k) != 0) {
            if (c[k] % snf_.d.at(k, k) != 0) return std::nullopt;
            w[k] = c[k] / snf_.d.at(k, k);
        } else if (c[k] != 0) {
            return std::nullopt;
        }
    }
    return snf_.v.mul_vec(w);
}

}  // namespace iyb
