#include "fkd/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fkd {

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_columns(int rows, const std::vector<Vec>& cols) {
    Mat m(rows, int(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

Mat Mat::from_rows(int cols, const std::vector<Vec>& rows) {
    Mat m(int(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

Vec Mat::row(int i) const { return Vec(a_.begin() + std::ptrdiff_t(i) * c_, a_.begin() + std::ptrdiff_t(i + 1) * c_); }

Vec Mat::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::apply(const Vec& v) const {
    Vec out(r_);
    for (int i = 0; i < r_; ++i) {
        Scalar s;
        for (int j = 0; j < c_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (!x.is_zero() && !v[j].is_zero()) s += x * v[j];
        }
        out[i] = s;
    }
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar& y = o(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::conj() const {
    Mat m = *this;
    for (auto& x : m.a_) x = x.conj();
    return m;
}

bool Mat::is_zero() const { return fkd::is_zero(a_); }

Scalar Mat::trace() const {
    Scalar s;
    for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
    return s;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int best = -1;
        std::size_t bh = 0;
        for (int i = r; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            std::size_t h = m(i, c).height();
            if (best < 0 || h < bh) {
                best = i;
                bh = h;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
        Scalar inv = m(r, c).inv();
        for (int j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int rank(Mat m) { return int(rref(m).size()); }

Mat kernel(const Mat& m0) {
    Mat m = m0;
    auto piv = rref(m);
    std::vector<int> isp(m.cols(), -1);
    for (int i = 0; i < int(piv.size()); ++i) isp[piv[i]] = i;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (isp[f] >= 0) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (int i = 0; i < int(piv.size()); ++i) v[piv[i]] = -m(i, f);
        out.push_back(std::move(v));
    }
    return Mat::from_columns(m.cols(), out);
}

Mat column_space_rows(const Mat& m) {
    Mat t = m.transpose();
    auto piv = rref(t);
    Mat out(int(piv.size()), m.rows());
    for (int i = 0; i < int(piv.size()); ++i)
        for (int j = 0; j < m.rows(); ++j) out(i, j) = t(i, j);
    return out;
}

Mat inverse(const Mat& m) {
    int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    auto piv = rref(aug);
    if (int(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("matrix is singular");
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

Mat power(const Mat& m, unsigned long e) {
    Mat r = Mat::identity(m.rows()), b = m;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool is_nilpotent(const Mat& m) {
    if (m.rows() == 0) return true;
    // the kernels of m^k grow until they stabilise
    Mat p = m;
    int prev = -1;
    for (int k = 0; k <= m.rows(); ++k) {
        int r = rank(p);
        if (r == 0) return true;
        if (r == prev) return false;
        prev = r;
        p = p * m;
    }
    return false;
}

Subspace Subspace::span(int n, const std::vector<Vec>& vs) {
    Subspace s(n);
    for (const auto& v : vs) s.insert(v);
    return s;
}

Subspace Subspace::whole(int n) {
    Subspace s(n);
    for (int i = 0; i < n; ++i) {
        Vec v(n);
        v[i] = Scalar(1);
        s.rows_.push_back(std::move(v));
        s.piv_.push_back(i);
    }
    return s;
}

void Subspace::reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = v[piv_[i]];
        if (f.is_zero()) continue;
        const Vec& r = rows_[i];
        for (int j = piv_[i]; j < n_; ++j)
            if (!r[j].is_zero()) v[j] -= f * r[j];
    }
}

bool Subspace::contains(Vec v) const {
    reduce(v);
    return fkd::is_zero(v);
}

bool Subspace::insert(Vec v) {
    reduce(v);
    int p = -1;
    for (int j = 0; j < n_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Scalar inv = v[p].inv();
    for (int j = p; j < n_; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    for (auto& r : rows_) {
        Scalar f = r[p];
        if (f.is_zero()) continue;
        for (int j = p; j < n_; ++j)
            if (!v[j].is_zero()) r[j] -= f * v[j];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

void Subspace::add(const Subspace& o) {
    for (const auto& r : o.rows_) insert(r);
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    return c;
}

std::vector<int> Subspace::free_columns() const {
    std::vector<int> out;
    std::size_t k = 0;
    for (int j = 0; j < n_; ++j) {
        if (k < piv_.size() && piv_[k] == j) {
            ++k;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

Mat Subspace::as_columns() const { return Mat::from_columns(n_, rows_); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    // x in a∩b  <=>  x = sum c_i a_i with x killed by annihilator of b
    Subspace bann = annihilator(b);
    if (a.dim() == 0 || bann.dim() == 0) return a;
    Mat m(bann.dim(), a.dim());
    for (int i = 0; i < bann.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Scalar s;
            const Vec& f = bann.basis()[i];
            const Vec& v = a.basis()[j];
            for (int k = 0; k < a.ambient(); ++k)
                if (!f[k].is_zero() && !v[k].is_zero()) s += f[k] * v[k];
            m(i, j) = s;
        }
    Mat ker = kernel(m);
    Subspace out(a.ambient());
    for (int c = 0; c < ker.cols(); ++c) {
        Vec x(a.ambient());
        for (int j = 0; j < a.dim(); ++j) {
            const Scalar& cj = ker(j, c);
            if (cj.is_zero()) continue;
            for (int k = 0; k < a.ambient(); ++k)
                if (!a.basis()[j][k].is_zero()) x[k] += cj * a.basis()[j][k];
        }
        out.insert(std::move(x));
    }
    return out;
}

Subspace annihilator(const Subspace& a) {
    Mat m = Mat::from_rows(a.ambient(), a.basis());
    if (a.dim() == 0) return Subspace::whole(a.ambient());
    Mat k = kernel(m);
    Subspace out(a.ambient());
    for (int c = 0; c < k.cols(); ++c) out.insert(k.col(c));
    return out;
}

void SparseMat::add(int i, int j, const Scalar& v) {
    if (v.is_zero()) return;
    auto& col = cols_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) {
        it->second += v;
        if (it->second.is_zero()) col.erase(it);
    } else {
        col.insert(it, {i, v});
    }
}

Scalar SparseMat::get(int i, int j) const {
    const auto& col = cols_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, int r) { return e.first < r; });
    if (it != col.end() && it->first == i) return it->second;
    return {};
}

std::size_t SparseMat::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

Vec SparseMat::apply(const Vec& v) const {
    Vec out(r_);
    for (int j = 0; j < cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [i, x] : cols_[j]) out[i] += x * v[j];
    }
    return out;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols() != o.rows()) throw std::invalid_argument("sparse shape mismatch in product");
    SparseMat m(r_, o.cols());
    for (int j = 0; j < o.cols(); ++j) {
        std::vector<std::pair<int, Scalar>> acc;
        for (const auto& [k, y] : o.cols_[j])
            for (const auto& [i, x] : cols_[k]) acc.emplace_back(i, x * y);
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& col = m.cols_[j];
        for (auto& [i, v] : acc) {
            if (!col.empty() && col.back().first == i) col.back().second += v;
            else col.emplace_back(i, std::move(v));
        }
        std::erase_if(col, [](const Entry& e) { return e.second.is_zero(); });
    }
    return m;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    SparseMat m = *this;
    for (int j = 0; j < o.cols(); ++j)
        for (const auto& [i, v] : o.cols_[j]) m.add(i, j, v);
    return m;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + o.scaled(Scalar(-1)); }

SparseMat SparseMat::scaled(const Scalar& s) const {
    SparseMat m(r_, cols());
    if (s.is_zero()) return m;
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) m.cols_[j].emplace_back(i, v * s);
    return m;
}

SparseMat SparseMat::transpose() const {
    SparseMat m(cols(), r_);
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j]) m.cols_[i].emplace_back(j, v);
    return m;
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Scalar(1));
    return m;
}

SparseMat SparseMat::diagonal(const std::vector<Scalar>& d) {
    SparseMat m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i)
        if (!d[i].is_zero()) m.cols_[i].emplace_back(i, d[i]);
    return m;
}

SparseMat SparseMat::kron(const SparseMat& a, const SparseMat& b) {
    SparseMat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int jb = 0; jb < b.cols(); ++jb) {
            auto& col = m.cols_[ja * b.cols() + jb];
            for (const auto& [ia, x] : a.cols_[ja])
                for (const auto& [ib, y] : b.cols_[jb]) col.emplace_back(ia * b.rows() + ib, x * y);
        }
    return m;
}

}  // namespace fkd
