#include "glcoh/linalg.hpp"

namespace glcoh {

int bareiss_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
    using boost::multiprecision::cpp_int;
    if (m.empty()) return 0;
    std::size_t nrows = m.size(), ncols = m[0].size();
    cpp_int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && m[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(m[row], m[sel]);
        for (std::size_t i = row + 1; i < nrows; ++i) {
            if (m[i][col] == 0 && m[row][col] == prev) continue;  // unchanged
            for (std::size_t c = col + 1; c < ncols; ++c) {
                if (m[i][c] == 0 && (m[i][col] == 0 || m[row][c] == 0)) continue;
                m[i][c] = (m[row][col] * m[i][c] - m[i][col] * m[row][c]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<int>(row);
}

}  // namespace glcoh
