#pragma once

#include "qcv/report.hpp"
#include "qcv/series.hpp"

namespace qcv {

template <class R>
CheckReport check_equal(std::string id, std::string statement, const Series<R>& lhs,
                        const Series<R>& rhs, std::size_t upto, const Stopwatch& sw) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.statement = std::move(statement);
  rep.order = upto;
  rep.instances = upto;
  if (auto n = first_mismatch(lhs, rhs, upto)) {
    rep.ok = false;
    rep.counterexample = {static_cast<unsigned long long>(*n),
                          lhs.ring().str(lhs[*n]) + " != " + lhs.ring().str(rhs[*n])};
  }
  rep.millis = sw.millis();
  return rep;
}

template <class R>
CheckReport check_zero(std::string id, std::string statement, const Series<R>& s,
                       std::size_t upto, const Stopwatch& sw) {
  CheckReport rep;
  rep.id = std::move(id);
  rep.statement = std::move(statement);
  rep.order = upto;
  rep.instances = upto;
  for (std::size_t n = 0; n < upto; ++n) {
    if (!s.ring().is_zero(s[n])) {
      rep.ok = false;
      rep.counterexample = {static_cast<unsigned long long>(n), s.ring().str(s[n])};
      break;
    }
  }
  rep.millis = sw.millis();
  return rep;
}

}  // namespace qcv
