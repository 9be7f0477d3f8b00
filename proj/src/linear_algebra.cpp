#include <ellgw/linear_algebra.hpp>

#include <utility>

namespace ellgw
{

std::vector<int> row_reduce(Matrix &m, int columns)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < columns && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][static_cast<std::size_t>(col)] == 0) {
            ++sel;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[row], m[sel]);
        const Rational inv = 1 / m[row][static_cast<std::size_t>(col)];
        for (auto &x : m[row]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][static_cast<std::size_t>(col)] == 0) {
                continue;
            }
            const Rational factor = m[r][static_cast<std::size_t>(col)];
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (m[row][c] != 0) {
                    m[r][c] -= factor * m[row][c];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(Matrix m, int columns)
{
    const auto pivots = row_reduce(m, columns);
    std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
    for (int p : pivots) {
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < columns; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) {
            continue;
        }
        std::vector<Rational> v(static_cast<std::size_t>(columns), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix &m, const std::vector<Rational> &rhs, int columns)
{
    Matrix aug = m;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        aug[r].resize(static_cast<std::size_t>(columns));
        aug[r].push_back(rhs[r]);
    }
    const auto pivots = row_reduce(aug, columns + 1);
    std::vector<Rational> x(static_cast<std::size_t>(columns), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == columns) {
            return std::nullopt;
        }
        x[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(columns)];
    }
    return x;
}

} // namespace ellgw
