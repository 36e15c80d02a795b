#include "smtwt/instance.hpp"

#include <sstream>

namespace smtwt {

std::string ValidationReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream out;
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (k > 0) out << '\n';
    out << errors[k];
  }
  return out.str();
}

namespace {

void check_field(const std::vector<std::int64_t>& values, int n,
                 const char* name, ValidationReport& report) {
  if (static_cast<int>(values.size()) != n + 1) {
    std::ostringstream msg;
    msg << name << " has " << values.size() << " entries, expected " << n + 1
        << " (slot 0 plus one per job)";
    report.errors.push_back(msg.str());
    return;
  }
  for (int j = 1; j <= n; ++j) {
    if (values[j] < 0) {
      std::ostringstream msg;
      msg << name << "[" << j << "] is negative (" << values[j] << ")";
      report.errors.push_back(msg.str());
    }
  }
}

}  // namespace

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  if (inst.n < 1) {
    report.errors.push_back("job count must be positive");
    report.ok = false;
    return report;
  }
  check_field(inst.p, inst.n, "p", report);
  check_field(inst.d, inst.n, "d", report);
  check_field(inst.w, inst.n, "w", report);

  const std::size_t rows = inst.n + 1;
  if (inst.setup_data().size() != rows * rows) {
    std::ostringstream msg;
    msg << "setup matrix has " << inst.setup_data().size()
        << " entries, expected " << rows << "x" << rows;
    report.errors.push_back(msg.str());
  } else {
    for (int i = 0; i <= inst.n; ++i) {
      for (int j = 0; j <= inst.n; ++j) {
        if (i != j && inst.setup(i, j) < 0) {
          std::ostringstream msg;
          msg << "s[" << i << "][" << j << "] is negative ("
              << inst.setup(i, j) << ")";
          report.errors.push_back(msg.str());
        }
      }
    }
  }
  report.ok = report.errors.empty();
  return report;
}

}  // namespace smtwt
