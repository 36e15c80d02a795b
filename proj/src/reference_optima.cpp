#include "smtwt/reference_optima.hpp"

#include <cctype>

namespace smtwt {

const std::map<std::string, Cost>& reference_optima() {
  static const std::map<std::string, Cost> table = {
      // Rubin, n = 15
      {"401", 90}, {"402", 0}, {"403", 3418}, {"404", 1067},
      {"405", 0}, {"406", 0}, {"407", 1861}, {"408", 5660},
      // Rubin, n = 25
      {"501", 261}, {"502", 0}, {"503", 3497}, {"504", 0},
      {"505", 0}, {"506", 0}, {"507", 7225}, {"508", 1915},
      // Rubin, n = 35
      {"601", 12}, {"602", 0}, {"603", 17587}, {"604", 19092},
      {"605", 228}, {"606", 0}, {"607", 12969}, {"608", 4732},
      // Rubin, n = 45
      {"701", 97}, {"702", 0}, {"703", 26506}, {"704", 15206},
      {"705", 200}, {"706", 0}, {"707", 23789}, {"708", 22807},
      // Gagne, n = 55
      {"551", 183}, {"552", 0}, {"553", 40498}, {"554", 14653},
      {"555", 0}, {"556", 0}, {"557", 35813}, {"558", 19871},
      // Gagne, n = 65
      {"651", 247}, {"652", 0}, {"653", 57500}, {"654", 34301},
      {"655", 0}, {"656", 0}, {"657", 54895}, {"658", 27114},
      // Gagne, n = 75
      {"751", 225}, {"752", 0}, {"753", 77544}, {"754", 35200},
      {"755", 0}, {"756", 0}, {"757", 59635}, {"758", 38339},
      // Gagne, n = 85 (851 and 855 are best known upper bounds)
      {"851", 360}, {"852", 0}, {"853", 97497}, {"854", 79042},
      {"855", 258}, {"856", 0}, {"857", 87011}, {"858", 74739},
  };
  return table;
}

std::optional<Cost> lookup_reference(const std::string& id) {
  const auto& table = reference_optima();
  if (const auto hit = table.find(id); hit != table.end()) {
    return hit->second;
  }
  std::string digits;
  for (const char c : id) {
    if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
  }
  if (!digits.empty()) {
    if (const auto hit = table.find(digits); hit != table.end()) {
      return hit->second;
    }
  }
  return std::nullopt;
}

}  // namespace smtwt
