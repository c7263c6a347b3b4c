#pragma once

// Pinned gadget combinatorics: outer-cycle vertices come first,
// rotations are clockwise, crossings carry orientation flags.

#include <array>
#include <vector>

namespace oneplane::detail {

struct GadgetData {
    int k;
    int n;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<std::array<int, 3>> crossings;  // first, second, flag
};

inline const GadgetData& gadget_data_4() {
    static const GadgetData d{
        4, 4,
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}},
        {
            {0, 3, 4},
            {0, 5, 1},
            {1, 4, 2},
            {2, 5, 3},
        },
        {{4, 5, 1}},
    };
    return d;
}

inline const GadgetData& gadget_data_5() {
    static const GadgetData d{
        5, 11,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 2}, {2, 7}, {7, 8}, {8, 4}, {4, 9}, {9, 5}, {5, 1}, {1, 6}, {6, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 0}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}},
        {
            {4, 19, 5, 0},
            {0, 13, 14, 1},
            {1, 7, 8, 2},
            {2, 16, 17, 3},
            {11, 4, 3, 10},
            {13, 5, 12, 20, 6},
            {14, 6, 21, 15, 7},
            {15, 22, 9, 16, 8},
            {23, 18, 10, 17, 9},
            {12, 19, 11, 18, 24},
            {20, 24, 23, 22, 21},
        },
        {},
    };
    return d;
}

inline const GadgetData& gadget_data_6() {
    static const GadgetData d{
        6, 13,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 2}, {1, 7}, {7, 3}, {2, 8}, {8, 4}, {3, 9}, {9, 5}, {4, 10}, {10, 0}, {5, 11}, {11, 1}, {0, 11}, {11, 12}, {12, 8}, {8, 3}, {1, 6}, {6, 12}, {12, 9}, {9, 4}, {2, 7}, {7, 12}, {12, 10}, {10, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 6}},
        {
            {5, 15, 18, 6, 0},
            {0, 17, 22, 8, 1},
            {1, 7, 26, 10, 2},
            {2, 9, 21, 12, 3},
            {11, 25, 14, 4, 3},
            {16, 5, 4, 13, 29},
            {22, 6, 35, 23, 30, 7},
            {8, 30, 27, 31, 9, 26},
            {10, 31, 20, 32, 11, 21},
            {24, 33, 13, 25, 12, 32},
            {34, 15, 29, 14, 33, 28},
            {17, 18, 16, 34, 19, 35},
            {23, 19, 28, 24, 20, 27},
        },
        {{6, 17, 0}, {7, 8, 1}, {9, 10, 1}, {11, 12, 1}, {13, 14, 1}, {15, 16, 1}},
    };
    return d;
}

inline const GadgetData& gadget_data_7() {
    static const GadgetData d{
        7, 43,
        {{8, 9}, {0, 1}, {7, 8}, {9, 10}, {1, 2}, {7, 9}, {10, 11}, {2, 3}, {7, 10}, {11, 12}, {3, 4}, {7, 11}, {12, 13}, {4, 5}, {7, 12}, {13, 14}, {5, 6}, {7, 13}, {14, 8}, {6, 0}, {7, 14}, {15, 16}, {29, 30}, {15, 29}, {16, 17}, {30, 31}, {16, 30}, {17, 18}, {31, 32}, {17, 31}, {18, 19}, {32, 33}, {18, 32}, {19, 20}, {33, 34}, {19, 33}, {20, 21}, {34, 35}, {20, 34}, {21, 22}, {35, 36}, {21, 35}, {22, 23}, {36, 37}, {22, 36}, {23, 24}, {37, 38}, {23, 37}, {24, 25}, {38, 39}, {24, 38}, {25, 26}, {39, 40}, {25, 39}, {26, 27}, {40, 41}, {26, 40}, {27, 28}, {41, 42}, {27, 41}, {28, 15}, {42, 29}, {28, 42}, {8, 17}, {17, 32}, {32, 0}, {0, 31}, {31, 18}, {18, 8}, {8, 19}, {19, 32}, {32, 1}, {1, 33}, {33, 20}, {20, 9}, {9, 19}, {19, 34}, {34, 1}, {1, 35}, {35, 20}, {20, 10}, {10, 21}, {21, 36}, {36, 2}, {2, 35}, {35, 22}, {22, 10}, {10, 23}, {23, 36}, {36, 3}, {3, 37}, {37, 24}, {24, 11}, {11, 23}, {23, 38}, {38, 3}, {3, 39}, {39, 24}, {24, 12}, {12, 25}, {25, 40}, {40, 4}, {4, 39}, {39, 26}, {26, 12}, {12, 27}, {27, 40}, {40, 5}, {5, 41}, {41, 28}, {28, 13}, {13, 27}, {27, 42}, {42, 5}, {5, 29}, {29, 28}, {28, 14}, {14, 15}, {15, 30}, {30, 6}, {6, 29}, {29, 16}, {16, 14}, {14, 17}, {17, 30}, {30, 0}, {0, 33}, {33, 18}, {18, 9}, {9, 21}, {21, 34}, {34, 2}, {2, 37}, {37, 22}, {22, 11}, {11, 25}, {25, 38}, {38, 4}, {4, 41}, {41, 26}, {26, 13}, {13, 15}, {15, 42}, {42, 6}, {6, 31}, {31, 16}, {16, 8}},
        {
            {19, 125, 66, 65, 126, 1},
            {1, 71, 72, 77, 78, 4},
            {4, 131, 84, 83, 132, 7},
            {7, 89, 90, 95, 96, 10},
            {10, 137, 102, 101, 138, 13},
            {113, 114, 16, 13, 107, 108},
            {144, 19, 16, 143, 120, 119},
            {5, 2, 20, 17, 14, 11, 8},
            {69, 68, 63, 146, 18, 2, 0},
            {74, 75, 128, 0, 5, 3, 129},
            {81, 80, 3, 8, 6, 87, 86},
            {134, 6, 11, 9, 135, 92, 93},
            {9, 14, 12, 105, 104, 99, 98},
            {17, 15, 141, 110, 111, 140, 12},
            {18, 123, 122, 117, 116, 15, 20},
            {21, 118, 23, 142, 60, 141, 117},
            {24, 145, 26, 121, 21, 122, 146},
            {27, 64, 29, 124, 24, 123, 63},
            {127, 32, 67, 27, 68, 128, 30},
            {35, 70, 30, 69, 75, 33, 76},
            {38, 73, 33, 74, 80, 36, 79},
            {41, 130, 36, 129, 81, 39, 82},
            {85, 39, 86, 134, 42, 133, 44},
            {88, 42, 87, 93, 45, 94, 47},
            {45, 92, 98, 48, 97, 50, 91},
            {48, 135, 99, 51, 100, 53, 136},
            {104, 140, 54, 139, 56, 103, 51},
            {111, 57, 112, 59, 106, 54, 105},
            {116, 60, 115, 62, 109, 57, 110},
            {121, 22, 120, 114, 61, 115, 23},
            {25, 125, 119, 22, 118, 26, 124},
            {28, 66, 144, 25, 145, 29, 67},
            {65, 28, 64, 32, 70, 31, 71},
            {72, 126, 31, 127, 35, 73, 34},
            {77, 34, 76, 38, 130, 37, 131},
            {78, 37, 79, 41, 85, 40, 84},
            {83, 40, 82, 44, 88, 43, 89},
            {132, 43, 133, 47, 91, 46, 90},
            {46, 94, 50, 136, 49, 137, 95},
            {49, 97, 53, 103, 52, 102, 96},
            {100, 56, 106, 55, 107, 101, 52},
            {59, 109, 58, 108, 138, 55, 139},
            {62, 142, 61, 143, 113, 58, 112},
        },
        {{64, 67, 1}, {69, 128, 1}, {70, 127, 0}, {71, 126, 1}, {73, 76, 0}, {78, 131, 0}, {79, 130, 1}, {80, 129, 0}, {82, 85, 1}, {87, 134, 1}, {88, 133, 0}, {89, 132, 1}, {91, 94, 0}, {96, 137, 0}, {97, 136, 1}, {98, 135, 0}, {100, 103, 1}, {105, 140, 1}, {106, 139, 0}, {107, 138, 1}, {109, 112, 0}, {114, 143, 0}, {115, 142, 1}, {116, 141, 0}, {118, 121, 1}, {123, 146, 1}, {124, 145, 0}, {125, 144, 1}},
    };
    return d;
}

}  // namespace oneplane::detail
