#pragma once

// Facet-center coordinates of the right-angled 120-cell, one row per facet
// in the census label order.  Each component is a + b*sqrt(5) stored as
// {a_num, a_den, b_num, b_den}; the centers are unit quaternions (w,x,y,z).

namespace smallcover::detail {

inline constexpr int kCenterTable[120][4][4] = {
    {{1, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}},
    {{1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 4, 1, 4}, {1, 2, 0, 2}},
    {{1, 4, 1, 4}, {0, 2, 0, 2}, {1, 4, -1, 4}, {1, 2, 0, 2}},
    {{1, 4, 1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, 1, 4}},
    {{1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 2, 0, 2}},
    {{1, 4, 1, 4}, {0, 2, 0, 2}, {1, 4, -1, 4}, {-1, 2, 0, 2}},
    {{1, 4, 1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, -1, 4}},
    {{1, 4, 1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, 1, 4}},
    {{1, 4, 1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, -1, 4}},
    {{1, 4, 1, 4}, {-1, 4, 1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}},
    {{1, 4, 1, 4}, {-1, 4, 1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}},
    {{1, 4, 1, 4}, {1, 4, -1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}},
    {{1, 4, 1, 4}, {1, 4, -1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 4, 1, 4}, {-1, 4, 1, 4}, {0, 2, 0, 2}},
    {{1, 2, 0, 2}, {1, 4, 1, 4}, {1, 4, -1, 4}, {0, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 4, 1, 4}, {0, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 4, -1, 4}, {1, 4, -1, 4}, {0, 2, 0, 2}},
    {{1, 2, 0, 2}, {-1, 4, 1, 4}, {0, 2, 0, 2}, {1, 4, 1, 4}},
    {{1, 2, 0, 2}, {-1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 4, -1, 4}},
    {{1, 2, 0, 2}, {1, 4, -1, 4}, {0, 2, 0, 2}, {1, 4, 1, 4}},
    {{1, 2, 0, 2}, {1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 4, -1, 4}},
    {{1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, 1, 4}, {-1, 4, 1, 4}},
    {{1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, 1, 4}, {1, 4, -1, 4}},
    {{1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 4, 1, 4}},
    {{1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, -1, 4}, {1, 4, -1, 4}},
    {{-1, 4, 1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}, {1, 4, 1, 4}},
    {{-1, 4, 1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}, {-1, 4, -1, 4}},
    {{-1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}, {1, 4, 1, 4}},
    {{-1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 4, -1, 4}},
    {{-1, 4, 1, 4}, {1, 4, 1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 4, 1, 4}, {1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 4, 1, 4}, {-1, 4, -1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 4, 1, 4}, {-1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 4, 1, 4}, {1, 2, 0, 2}, {1, 4, 1, 4}, {0, 2, 0, 2}},
    {{-1, 4, 1, 4}, {1, 2, 0, 2}, {-1, 4, -1, 4}, {0, 2, 0, 2}},
    {{-1, 4, 1, 4}, {-1, 2, 0, 2}, {1, 4, 1, 4}, {0, 2, 0, 2}},
    {{-1, 4, 1, 4}, {-1, 2, 0, 2}, {-1, 4, -1, 4}, {0, 2, 0, 2}},
    {{0, 1, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}},
    {{0, 1, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1}, {0, 1, 0, 1}},
    {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}, {1, 1, 0, 1}},
    {{0, 2, 0, 2}, {1, 2, 0, 2}, {-1, 4, 1, 4}, {1, 4, 1, 4}},
    {{0, 2, 0, 2}, {1, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 4, -1, 4}},
    {{0, 2, 0, 2}, {1, 2, 0, 2}, {1, 4, -1, 4}, {1, 4, 1, 4}},
    {{0, 2, 0, 2}, {1, 2, 0, 2}, {1, 4, -1, 4}, {-1, 4, -1, 4}},
    {{0, 2, 0, 2}, {1, 4, 1, 4}, {1, 2, 0, 2}, {-1, 4, 1, 4}},
    {{0, 2, 0, 2}, {1, 4, 1, 4}, {1, 2, 0, 2}, {1, 4, -1, 4}},
    {{0, 2, 0, 2}, {1, 4, 1, 4}, {-1, 2, 0, 2}, {-1, 4, 1, 4}},
    {{0, 2, 0, 2}, {1, 4, 1, 4}, {-1, 2, 0, 2}, {1, 4, -1, 4}},
    {{0, 2, 0, 2}, {-1, 4, 1, 4}, {1, 4, 1, 4}, {1, 2, 0, 2}},
    {{0, 2, 0, 2}, {-1, 4, 1, 4}, {1, 4, 1, 4}, {-1, 2, 0, 2}},
    {{0, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 4, -1, 4}, {1, 2, 0, 2}},
    {{0, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 4, -1, 4}, {-1, 2, 0, 2}},
    {{0, 1, 0, 1}, {-1, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}},
    {{0, 1, 0, 1}, {0, 1, 0, 1}, {-1, 1, 0, 1}, {0, 1, 0, 1}},
    {{0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}, {-1, 1, 0, 1}},
    {{0, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 4, 1, 4}, {1, 4, 1, 4}},
    {{0, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 4, -1, 4}},
    {{0, 2, 0, 2}, {-1, 2, 0, 2}, {1, 4, -1, 4}, {1, 4, 1, 4}},
    {{0, 2, 0, 2}, {-1, 2, 0, 2}, {1, 4, -1, 4}, {-1, 4, -1, 4}},
    {{0, 2, 0, 2}, {-1, 4, -1, 4}, {1, 2, 0, 2}, {-1, 4, 1, 4}},
    {{0, 2, 0, 2}, {-1, 4, -1, 4}, {1, 2, 0, 2}, {1, 4, -1, 4}},
    {{0, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 2, 0, 2}, {-1, 4, 1, 4}},
    {{0, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 2, 0, 2}, {1, 4, -1, 4}},
    {{0, 2, 0, 2}, {1, 4, -1, 4}, {1, 4, 1, 4}, {1, 2, 0, 2}},
    {{0, 2, 0, 2}, {1, 4, -1, 4}, {1, 4, 1, 4}, {-1, 2, 0, 2}},
    {{0, 2, 0, 2}, {1, 4, -1, 4}, {-1, 4, -1, 4}, {1, 2, 0, 2}},
    {{0, 2, 0, 2}, {1, 4, -1, 4}, {-1, 4, -1, 4}, {-1, 2, 0, 2}},
    {{1, 4, -1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}, {1, 4, 1, 4}},
    {{1, 4, -1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}, {-1, 4, -1, 4}},
    {{1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}, {1, 4, 1, 4}},
    {{1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 4, -1, 4}},
    {{1, 4, -1, 4}, {1, 4, 1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 4, -1, 4}, {1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 4, -1, 4}, {-1, 4, -1, 4}, {0, 2, 0, 2}, {1, 2, 0, 2}},
    {{1, 4, -1, 4}, {-1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 2, 0, 2}},
    {{1, 4, -1, 4}, {1, 2, 0, 2}, {1, 4, 1, 4}, {0, 2, 0, 2}},
    {{1, 4, -1, 4}, {1, 2, 0, 2}, {-1, 4, -1, 4}, {0, 2, 0, 2}},
    {{1, 4, -1, 4}, {-1, 2, 0, 2}, {1, 4, 1, 4}, {0, 2, 0, 2}},
    {{1, 4, -1, 4}, {-1, 2, 0, 2}, {-1, 4, -1, 4}, {0, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}, {1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}, {-1, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 4, 1, 4}, {-1, 4, 1, 4}, {0, 2, 0, 2}},
    {{-1, 2, 0, 2}, {1, 4, 1, 4}, {1, 4, -1, 4}, {0, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 4, 1, 4}, {0, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 4, -1, 4}, {1, 4, -1, 4}, {0, 2, 0, 2}},
    {{-1, 2, 0, 2}, {-1, 4, 1, 4}, {0, 2, 0, 2}, {1, 4, 1, 4}},
    {{-1, 2, 0, 2}, {-1, 4, 1, 4}, {0, 2, 0, 2}, {-1, 4, -1, 4}},
    {{-1, 2, 0, 2}, {1, 4, -1, 4}, {0, 2, 0, 2}, {1, 4, 1, 4}},
    {{-1, 2, 0, 2}, {1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 4, -1, 4}},
    {{-1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, 1, 4}, {-1, 4, 1, 4}},
    {{-1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, 1, 4}, {1, 4, -1, 4}},
    {{-1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, -1, 4}, {-1, 4, 1, 4}},
    {{-1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, -1, 4}, {1, 4, -1, 4}},
    {{-1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 4, 1, 4}, {1, 2, 0, 2}},
    {{-1, 4, -1, 4}, {0, 2, 0, 2}, {-1, 4, 1, 4}, {-1, 2, 0, 2}},
    {{-1, 4, -1, 4}, {0, 2, 0, 2}, {1, 4, -1, 4}, {1, 2, 0, 2}},
    {{-1, 4, -1, 4}, {0, 2, 0, 2}, {1, 4, -1, 4}, {-1, 2, 0, 2}},
    {{-1, 4, -1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, 1, 4}},
    {{-1, 4, -1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, -1, 4}},
    {{-1, 4, -1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}, {-1, 4, 1, 4}},
    {{-1, 4, -1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}, {1, 4, -1, 4}},
    {{-1, 4, -1, 4}, {-1, 4, 1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}},
    {{-1, 4, -1, 4}, {-1, 4, 1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}},
    {{-1, 4, -1, 4}, {1, 4, -1, 4}, {1, 2, 0, 2}, {0, 2, 0, 2}},
    {{-1, 4, -1, 4}, {1, 4, -1, 4}, {-1, 2, 0, 2}, {0, 2, 0, 2}},
    {{-1, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1}},
};

}  // namespace smallcover::detail
