#pragma once

// Reference words for the constructions, digits only.

#include <string_view>

namespace published {

struct Entry {
  std::string_view family;
  int n;
  int k;
  std::string_view word;
};

inline constexpr Entry kZimin[] = {
    {"zimin", 1, 2, "1"},
    {"zimin", 2, 2, "121"},
    {"zimin", 3, 2, "1213121"},
    {"zimin", 4, 2, "121312141213121"},
};

inline constexpr Entry kDoubling[] = {
    {"doubling", 1, 3, "11"},
    {"doubling", 2, 3, "21211"},
    {"doubling", 3, 3, "31213121211"},
};

inline constexpr Entry kW[] = {
    {"wn", 4, 3, "34423312243322143232122334"},
    {"wn", 5, 3, "45534423312254433221543243212233445"},
    {"wn", 6, 3, "56645534423312265544332216543254321223344556"},
    {"wn", 7, 3, "67756645534423312276655443322176543265432122334455667"},
};

inline constexpr Entry kE[] = {
    {"en", 4, 3, "34423311342311343233411"},
    {"en", 5, 3, "45534423311453423113454323344511"},
    {"en", 6, 3, "56645534423311564534231134565432334455611"},
    {"en", 7, 3, "67756645534423311675645342311345676543233445566711"},
};

inline constexpr Entry kD2[] = {
    {"dn", 4, 2, "342313231"},
    {"dn", 5, 2, "4534231432341"},
    {"dn", 6, 2, "56453423154323451"},
    {"dn", 7, 2, "675645342316543234561"},
};

inline constexpr Entry kDk[] = {
    {"dnk", 4, 3, "34423311342311343233411"},
    {"dnk", 5, 3, "45534423311453423113454323344511"},
    {"dnk", 5, 4, "45553444233311145534423311134545342311133445543233344455111"},
    {"dnk", 4, 4, "3444233311134423311134342311133443233344111"},
    {"dnk", 4, 5, "344442333311113444233311113434423311113344342311113334443233334441111"},
    {"dnk", 6, 4,
     "566645553444233311156645534423311134565645342311133445566543233344455566111"},
};

inline constexpr Entry kWk[] = {
    {"wnk", 4, 4, "34442333122234423312243243322144332232122233344"},
    {"wnk", 5, 4, "455534442333122245534423312254325443322155443322432122233344455"},
    {"wnk", 4, 5,
     "34444233331222234442333122243234423312244332243322144433322232122223333444"},
};

inline constexpr Entry kSmallOptimal[] = {
    {"smallopt", 1, 3, "11"},
    {"smallopt", 2, 3, "21211"},
    {"smallopt", 3, 3, "11231321211"},
    {"smallopt", 4, 3, "42131214231211321211"},
};

}  // namespace published
