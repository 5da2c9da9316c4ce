// Frozen expected values shared by several suites.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// The convergent presentation of CAs(3), second rule with the 9-symbol lhs.
inline const std::vector<std::pair<std::string, std::string>> cas3_rules = {
    {"2220000", "2020200"},
    {"220202000", "220020200"},
    {"20202202000", "20202020200"},
    {"20220200200", "20202020200"},
    {"2020220020200", "2020202022000"},
    {"2022002020200", "2020202200200"},
    {"2202200020200", "2200202020200"},
    {"202020202200200", "202020202022000"},
    {"202020220022000", "202020202020200"},
    {"220020202200200", "220020202022000"},
    {"220200202020200", "220020202022000"},
};

inline const std::vector<unsigned long> cas3_dims = {1, 1, 2, 4, 8, 14, 20, 19, 16, 14, 14, 15, 16, 17};

// Cubic trees a1..a5 in lex order.
inline const std::vector<std::string> cubic = {"2020200", "2022000", "2200200", "2202000", "2220000"};

// CAs(gamma) dimensions for gamma = 4, 5, 6, n = 1..10.
inline const std::vector<unsigned long> table2_row4 = {1, 1, 2, 5, 13, 35, 96, 264, 724, 1973};
inline const std::vector<unsigned long> table2_row5 = {1, 1, 2, 5, 14, 41, 124, 384, 1210, 3861};
inline const std::vector<unsigned long> table2_row6 = {1, 1, 2, 5, 14, 42, 131, 420, 1375, 4576};

inline const std::vector<unsigned long> mag23_dims = {1, 1, 2, 4, 8, 14, 21, 29, 38, 48};

}  // namespace fixtures
