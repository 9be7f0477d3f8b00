#include <ellgw/jet_algebra.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include <ellgw/linear_algebra.hpp>
#include <ellgw/series.hpp>

namespace ellgw
{

namespace
{

std::vector<int> without_one(const std::vector<int> &v, int index)
{
    std::vector<int> out(v);
    out.erase(std::find(out.begin(), out.end(), index));
    return out;
}

std::vector<int> with_one(std::vector<int> v, int index)
{
    v.insert(std::upper_bound(v.begin(), v.end(), index), index);
    return v;
}

// Monomial with one copy of `index` replaced by index + 1.
JetMonomial bumped(const JetMonomial &m, int index)
{
    return JetMonomial(with_one(without_one(m.indices(), index), index + 1));
}

// Distinct indices of m with their multiplicities.
std::vector<std::pair<int, int>> index_counts(const JetMonomial &m)
{
    std::vector<std::pair<int, int>> out;
    for (int i : m.indices()) {
        if (!out.empty() && out.back().first == i) {
            ++out.back().second;
        } else {
            out.emplace_back(i, 1);
        }
    }
    return out;
}

} // namespace

// ------------------------------------------------------------- JetMonomial

JetMonomial::JetMonomial(std::vector<int> indices) : indices_(std::move(indices))
{
    if (std::any_of(indices_.begin(), indices_.end(), [](int i) { return i < 0; })) {
        throw std::invalid_argument("jet index must be nonnegative");
    }
    std::sort(indices_.begin(), indices_.end());
}

JetMonomial JetMonomial::power_of_alpha(int exponent)
{
    return JetMonomial(std::vector<int>(static_cast<std::size_t>(exponent), 0));
}

int JetMonomial::degree() const
{
    int d = 0;
    for (int i : indices_) {
        d += i + 1;
    }
    return d;
}

int JetMonomial::derivative_count() const
{
    int d = 0;
    for (int i : indices_) {
        d += i;
    }
    return d;
}

int JetMonomial::max_index() const
{
    return indices_.empty() ? -1 : indices_.back();
}

int JetMonomial::multiplicity(int index) const
{
    return static_cast<int>(std::count(indices_.begin(), indices_.end(), index));
}

bool JetMonomial::is_basis() const
{
    if (indices_.size() <= 1) {
        return indices_.empty() || indices_[0] == 0;
    }
    const int top = indices_.back();
    return top == 0 || indices_[indices_.size() - 2] == top;
}

JetMonomial operator*(const JetMonomial &a, const JetMonomial &b)
{
    std::vector<int> merged;
    merged.reserve(a.indices_.size() + b.indices_.size());
    std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(), std::back_inserter(merged));
    JetMonomial r;
    r.indices_ = std::move(merged);
    return r;
}

// ---------------------------------------------------------------- DiffPoly

DiffPoly::DiffPoly(const Rational &constant)
{
    add_term(JetMonomial{}, constant);
}

DiffPoly::DiffPoly(const JetMonomial &m, const Rational &c)
{
    add_term(m, c);
}

DiffPoly DiffPoly::jet(int n)
{
    return DiffPoly(JetMonomial({n}), Rational(1));
}

Rational DiffPoly::coefficient(const JetMonomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const JetMonomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

DiffPoly DiffPoly::homogeneous_part(int degree) const
{
    DiffPoly r;
    for (const auto &[m, c] : terms_) {
        if (m.degree() == degree) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

bool DiffPoly::is_homogeneous() const
{
    if (terms_.empty()) {
        return true;
    }
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto &t) { return t.first.degree() == d; });
}

DiffPoly &DiffPoly::operator+=(const DiffPoly &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

DiffPoly &DiffPoly::operator-=(const DiffPoly &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

DiffPoly &DiffPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

DiffPoly operator*(const DiffPoly &a, const DiffPoly &b)
{
    DiffPoly r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

// -------------------------------------------------------------- operators

DiffPoly apply_D(const DiffPoly &f)
{
    DiffPoly r;
    for (const auto &[m, c] : f.terms()) {
        for (const auto &[index, mult] : index_counts(m)) {
            r.add_term(bumped(m, index), c * mult);
        }
    }
    return r;
}

NormalForm normal_form(const DiffPoly &f)
{
    // Largest max-index first: every rewrite strictly lowers the max index, so
    // a monomial is never revisited after it has been processed.
    auto cmp = [](const JetMonomial &a, const JetMonomial &b) {
        if (a.max_index() != b.max_index()) {
            return a.max_index() > b.max_index();
        }
        return a < b;
    };
    std::map<JetMonomial, Rational, decltype(cmp)> pending(cmp);
    auto push = [&pending](const JetMonomial &m, const Rational &c) {
        auto [it, inserted] = pending.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
        }
    };
    for (const auto &[m, c] : f.terms()) {
        push(m, c);
    }

    DiffPoly out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const JetMonomial &m = node.key();
        const Rational &c = node.mapped();
        if (c == 0) {
            continue;
        }
        if (m.is_basis()) {
            out.add_term(m, c);
            continue;
        }
        // m = m0 * a_j with j the unique maximal index. With m' = m0 * a_{j-1}
        // and t the multiplicity of a_{j-1} in m0,
        //   D(m') = (t + 1) m + sum_{i < j-1} e_i bump_i(m'),
        // hence m == -(1/(t+1)) sum_{i < j-1} e_i bump_i(m') modulo im D.
        const int j = m.max_index();
        const JetMonomial m0(without_one(m.indices(), j));
        const int t = m0.multiplicity(j - 1);
        const JetMonomial mprime(with_one(m0.indices(), j - 1));
        const Rational scale = -c / (t + 1);
        for (const auto &[index, mult] : index_counts(mprime)) {
            if (index == j - 1) {
                continue;
            }
            push(bumped(mprime, index), scale * mult);
        }
    }
    return NormalForm(std::move(out));
}

DiffPoly apply_E_raw(const DiffPoly &f)
{
    DiffPoly r;
    const Rational half = make_rational(1, 2);
    for (const auto &[m, c] : f.terms()) {
        const auto counts = index_counts(m);
        // First part: a_j -> 1/2 sum_{k+l=j+1} C(j+1,k) a_k a_l.
        for (const auto &[j, e] : counts) {
            const JetMonomial rest(without_one(m.indices(), j));
            for (int k = 0; k <= j + 1; ++k) {
                const int l = j + 1 - k;
                r.add_term(rest * JetMonomial({k, l}), half * binomial(j + 1, k) * e * c);
            }
        }
        // Second part: ordered pairs of slots (a_k, a_l) -> a_{k+l+3}.
        for (const auto &[k, ek] : counts) {
            for (const auto &[l, el] : counts) {
                long ways = 0;
                std::vector<int> rest;
                if (k == l) {
                    if (ek < 2) {
                        continue;
                    }
                    ways = static_cast<long>(ek) * (ek - 1);
                    rest = without_one(without_one(m.indices(), k), k);
                } else {
                    ways = static_cast<long>(ek) * el;
                    rest = without_one(without_one(m.indices(), k), l);
                }
                const Rational weight = factorial(k + 1) * factorial(l + 1) / factorial(k + l + 3);
                r.add_term(JetMonomial(with_one(std::move(rest), k + l + 3)), half * weight * ways * c);
            }
        }
    }
    return r;
}

NormalForm apply_E(const DiffPoly &f)
{
    return normal_form(apply_E_raw(f));
}

NormalForm vertex(int k)
{
    if (k < -1) {
        throw std::domain_error("vertex: k must be >= -1, got " + std::to_string(k));
    }
    DiffPoly p(Rational(1));
    const DiffPoly alpha = DiffPoly::jet(0);
    for (int i = 0; i < k + 2; ++i) {
        p = apply_D(p) + alpha * p;
    }
    return normal_form(p * (1 / factorial(k + 2)));
}

std::vector<JetMonomial> basis_monomials(int degree)
{
    std::vector<JetMonomial> out;
    if (degree < 0) {
        return out;
    }
    // Partitions of `degree`; a part p stands for the jet index p - 1.
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            std::vector<int> idx;
            idx.reserve(parts.size());
            for (int p : parts) {
                idx.push_back(p - 1);
            }
            JetMonomial m(std::move(idx));
            if (m.is_basis()) {
                out.push_back(std::move(m));
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(degree, degree);
    std::sort(out.begin(), out.end());
    return out;
}

KernelResult kernel_dimension(int degree)
{
    if (degree < 1) {
        throw std::domain_error("kernel_dimension: degree must be >= 1");
    }
    const auto source = basis_monomials(degree);
    const auto target = basis_monomials(degree + 2);
    std::map<JetMonomial, std::size_t> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) {
        row_of.emplace(target[i], i);
    }
    Matrix m(target.size(), std::vector<Rational>(source.size(), Rational(0)));
    for (std::size_t col = 0; col < source.size(); ++col) {
        const NormalForm image = apply_E(DiffPoly(source[col], Rational(1)));
        for (const auto &[mono, c] : image.poly().terms()) {
            const auto it = row_of.find(mono);
            if (it == row_of.end()) {
                throw std::logic_error("E left the degree-" + std::to_string(degree + 2) + " basis");
            }
            m[it->second][col] = c;
        }
    }
    KernelResult result;
    for (const auto &v : nullspace(std::move(m), static_cast<int>(source.size()))) {
        DiffPoly p;
        for (std::size_t i = 0; i < v.size(); ++i) {
            p.add_term(source[i], v[i]);
        }
        result.basis.push_back(normal_form(p));
    }
    result.dimension = static_cast<int>(result.basis.size());
    return result;
}

std::map<int, NormalForm> genus_split(const NormalForm &v)
{
    std::map<int, DiffPoly> parts;
    for (const auto &[m, c] : v.poly().terms()) {
        const int d = m.derivative_count();
        if (d % 2 != 0) {
            throw std::logic_error("genus_split: monomial with odd derivative count " + std::to_string(d));
        }
        parts[d / 2].add_term(m, c);
    }
    std::map<int, NormalForm> out;
    for (auto &[g, p] : parts) {
        out.emplace(g, normal_form(p));
    }
    return out;
}

} // namespace ellgw
