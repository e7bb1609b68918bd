// The discrepancy report: a structured record of places where the source
// construction's printed formulas disagree with values re-derived from the
// construction itself.  Findings are data, not failures.
#ifndef HALPHEN_REPORT_HPP
#define HALPHEN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace halphen {
namespace report {

struct Discrepancy {
  std::string location;  // where in the construction, e.g. "qes.tau_sup[k=1]"
  std::string paper;     // the printed value/formula
  std::string derived;   // the value obtained from the construction itself
  std::string note;      // optional context
};

class Report {
 public:
  void add(std::string location, std::string paper, std::string derived, std::string note = "") {
    items_.push_back({std::move(location), std::move(paper), std::move(derived), std::move(note)});
  }
  void merge(const Report& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }
  const std::vector<Discrepancy>& items() const { return items_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<Discrepancy> items_;
};

}  // namespace report
}  // namespace halphen

#endif
