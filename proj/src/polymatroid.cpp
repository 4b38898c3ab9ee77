#include <algorithm>

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

namespace dofregion {

PolymatroidCheck is_polymatroid(const VectorXr& beta, int max_users) {
  const auto users = static_cast<int>(beta.size());
  if (users < 1 || users > max_users) {
    throw ParameterOutOfRange(std::to_string(users) + " users outside the supported range 1.." +
                              std::to_string(max_users));
  }

  // Nonempty subsets as sorted index lists, in lexicographic order.
  std::vector<UserSet> subsets;
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < (1u << users); ++mask) {
    UserSet s;
    for (int i = 0; i < users; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& s : subsets) {
    unsigned mask = 0;
    for (int i : s) mask |= 1u << i;
    masks.push_back(mask);
  }

  std::vector<Rational> f(1u << users);
  for (std::size_t i = 0; i < subsets.size(); ++i) f[masks[i]] = region_set_function(beta, subsets[i]);

  PolymatroidCheck out;
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      const unsigned s = masks[a];
      const unsigned t = masks[b];
      if ((s & t) == s && f[s] > f[t]) {
        out.polymatroid = false;
        out.violation = PolymatroidViolation{PolymatroidViolation::Kind::Decreasing, subsets[a], subsets[b], f[s], f[t]};
        return out;
      }
      const Rational joined = f[s | t] + f[s & t];
      const Rational separate = f[s] + f[t];
      if (joined > separate) {
        out.polymatroid = false;
        out.violation = PolymatroidViolation{PolymatroidViolation::Kind::NotSubmodular, subsets[a], subsets[b],
                                             joined - 2, separate - 2};
        return out;
      }
    }
  }
  return out;
}

}  // namespace dofregion
