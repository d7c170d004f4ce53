#pragma once

// First 45 facet blocks (facet plus its 12 neighbours, sorted) of the
// 120-cell in census label order; golden data for adjacency checks.

inline constexpr int kBlockRows[45][13] = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
    {1, 2, 3, 4, 8, 10, 12, 14, 18, 26, 28, 30, 34},
    {1, 2, 3, 4, 8, 11, 13, 16, 20, 26, 28, 32, 36},
    {1, 2, 3, 4, 7, 10, 11, 14, 16, 22, 23, 26, 38},
    {1, 5, 6, 7, 9, 10, 12, 15, 19, 27, 29, 31, 35},
    {1, 5, 6, 7, 9, 11, 13, 17, 21, 27, 29, 33, 37},
    {1, 4, 5, 6, 7, 10, 11, 15, 17, 22, 23, 27, 39},
    {1, 2, 3, 8, 9, 12, 13, 18, 20, 24, 25, 28, 40},
    {1, 5, 6, 8, 9, 12, 13, 19, 21, 24, 25, 29, 41},
    {1, 2, 4, 5, 7, 10, 12, 14, 15, 22, 30, 31, 42},
    {1, 3, 4, 6, 7, 11, 13, 16, 17, 23, 32, 33, 43},
    {1, 2, 5, 8, 9, 10, 12, 18, 19, 24, 30, 31, 44},
    {1, 3, 6, 8, 9, 11, 13, 20, 21, 25, 32, 33, 45},
    {2, 4, 10, 14, 22, 26, 30, 34, 38, 42, 49, 53, 57},
    {5, 7, 10, 15, 22, 27, 31, 35, 39, 42, 50, 54, 58},
    {3, 4, 11, 16, 23, 26, 32, 36, 38, 43, 51, 55, 59},
    {6, 7, 11, 17, 23, 27, 33, 37, 39, 43, 52, 56, 60},
    {2, 8, 12, 18, 24, 28, 30, 34, 40, 44, 64, 68, 72},
    {5, 9, 12, 19, 24, 29, 31, 35, 41, 44, 65, 69, 73},
    {3, 8, 13, 20, 25, 28, 32, 36, 40, 45, 66, 70, 74},
    {6, 9, 13, 21, 25, 29, 33, 37, 41, 45, 67, 71, 75},
    {4, 7, 10, 14, 15, 22, 23, 38, 39, 42, 46, 57, 58},
    {4, 7, 11, 16, 17, 22, 23, 38, 39, 43, 46, 59, 60},
    {8, 9, 12, 18, 19, 24, 25, 40, 41, 44, 61, 72, 73},
    {8, 9, 13, 20, 21, 24, 25, 40, 41, 45, 61, 74, 75},
    {2, 3, 4, 14, 16, 26, 28, 34, 36, 38, 48, 49, 51},
    {5, 6, 7, 15, 17, 27, 29, 35, 37, 39, 50, 52, 63},
    {2, 3, 8, 18, 20, 26, 28, 34, 36, 40, 48, 64, 66},
    {5, 6, 9, 19, 21, 27, 29, 35, 37, 41, 63, 65, 67},
    {2, 10, 12, 14, 18, 30, 31, 34, 42, 44, 47, 53, 68},
    {5, 10, 12, 15, 19, 30, 31, 35, 42, 44, 47, 54, 69},
    {3, 11, 13, 16, 20, 32, 33, 36, 43, 45, 55, 62, 70},
    {6, 11, 13, 17, 21, 32, 33, 37, 43, 45, 56, 62, 71},
    {2, 14, 18, 26, 28, 30, 34, 48, 49, 53, 64, 68, 76},
    {5, 15, 19, 27, 29, 31, 35, 50, 54, 63, 65, 69, 77},
    {3, 16, 20, 26, 28, 32, 36, 48, 51, 55, 66, 70, 78},
    {6, 17, 21, 27, 29, 33, 37, 52, 56, 63, 67, 71, 79},
    {4, 14, 16, 22, 23, 26, 38, 46, 49, 51, 57, 59, 80},
    {7, 15, 17, 22, 23, 27, 39, 46, 50, 52, 58, 60, 81},
    {8, 18, 20, 24, 25, 28, 40, 61, 64, 66, 72, 74, 82},
    {9, 19, 21, 24, 25, 29, 41, 61, 65, 67, 73, 75, 83},
    {10, 14, 15, 22, 30, 31, 42, 47, 53, 54, 57, 58, 84},
    {11, 16, 17, 23, 32, 33, 43, 55, 56, 59, 60, 62, 85},
    {12, 18, 19, 24, 30, 31, 44, 47, 68, 69, 72, 73, 86},
    {13, 20, 21, 25, 32, 33, 45, 62, 70, 71, 74, 75, 87},
};
