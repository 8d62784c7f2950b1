#include "hhcoh/e6/validate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hhcoh/modules.hpp"

namespace hhcoh::e6 {

int printed_term_size(int r) {
  static const int sizes[11] = {6, 7, 6, 8, 9, 8, 9, 8, 6, 7, 6};
  if (r < 0 || r > 10) throw FamilyError("printed sizes exist for r <= 10 only");
  return sizes[r];
}

int simple_syzygy_period(int v, int s) {
  // A: [0, s), B: [s, 3s), C: [3s, 5s), D: [5s, 6s)
  bool a_or_c = v < s || (v >= 3 * s && v < 5 * s);
  return a_or_c ? 9 : 2;
}

bool ResolutionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ResolutionCheck& c) { return c.ok; });
}

const ResolutionCheck* ResolutionReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

template <class F>
ResolutionReport verify_resolution(const Family<F>& fam, int max_degree, int happel_degree) {
  ResolutionReport rep;
  const int s = fam.s();
  const auto& C = fam.complex();

  for (int r = 0; r <= 10; ++r) {
    std::size_t want = static_cast<std::size_t>(printed_term_size(r) * s);
    std::size_t want_cols = static_cast<std::size_t>(printed_term_size(r == 10 ? 0 : r + 1) * s);
    const auto& d = C.d(r);
    bool ok = fam.term(r).size() == want && d.rows() == want && d.cols() == want_cols;
    std::ostringstream os;
    os << "d" << r << " is " << d.cols() << " x " << d.rows() << ", expected " << want_cols << " x " << want;
    rep.checks.push_back({"shape", r, ok, os.str()});
  }

  for (int t = 0; t <= max_degree; ++t) {
    bool ok = composes_to_zero(C, t);
    rep.checks.push_back({"d2", t, ok, ok ? "" : "d" + std::to_string(t) + " d" + std::to_string(t + 1) + " != 0"});
  }

  auto ex = verify_exactness(C, max_degree);
  rep.checks.push_back({"exact", -1, ex.augmentation_surjective, ex.augmentation_surjective ? "" : "augmentation not surjective"});
  for (const auto& d : ex.degrees) {
    std::ostringstream os;
    os << "rank in " << d.rank_in << " + rank out " << d.rank_out << " vs dim " << d.dim_term;
    rep.checks.push_back({"exact", d.t, d.exact, os.str()});
  }

  const int hm = std::min(max_degree, happel_degree);
  const int n = fam.algebra().vertex_count();
  std::vector<SimpleResolution> res;
  for (int v = 0; v < n; ++v) res.push_back(resolve_simple(fam.algebra(), v, std::max(hm, 9)));
  for (int m = 0; m <= hm; ++m) {
    std::map<std::pair<int, int>, int> mult;
    for (const auto& p : fam.term(m)) ++mult[{p.left, p.right}];
    bool ok = true;
    std::ostringstream os;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        const auto& tops = res[static_cast<std::size_t>(j)].tops[static_cast<std::size_t>(m)];
        int ext = static_cast<int>(std::count(tops.begin(), tops.end(), i));
        int have = mult[std::make_pair(i, j)];
        if (ext != have) {
          ok = false;
          os << "P(" << i << "," << j << ") occurs " << have << " times, Ext has dimension " << ext;
        }
      }
    rep.checks.push_back({"happel", m, ok, os.str()});
  }
  for (int v = 0; v < n; ++v) {
    int k = simple_syzygy_period(v, s);
    bool ok = res[static_cast<std::size_t>(v)].syzygy_dims[static_cast<std::size_t>(k)] == 1;
    rep.checks.push_back({"syzygy", k, ok, "vertex " + std::to_string(v)});
  }
  return rep;
}

template ResolutionReport verify_resolution(const Family<PrimeField>&, int, int);
template ResolutionReport verify_resolution(const Family<RationalField>&, int, int);

}  // namespace hhcoh::e6
