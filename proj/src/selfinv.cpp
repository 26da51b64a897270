#include "ppforge/selfinv.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ppforge/errors.hpp"
#include "ppforge/numtheory.hpp"

namespace ppforge {

using u64 = std::uint64_t;

std::optional<CycloMapping> fit_mapping(const SparsePoly& f, u64 d, u64 cap) {
  const Field& field = f.field();
  require_within_cap(field.q(), cap, "fit_mapping");
  const CycloParams cp(f.field_ptr(), d);
  const std::vector<u64> values = value_table(f, cap);
  if (values[0] != 0) return std::nullopt;
  const CosetPartition parts = cosets(cp, cap);

  std::vector<Element> a;
  std::vector<u64> r;
  for (u64 i = 0; i < d; ++i) {
    const std::vector<Element>& coset = parts[i];
    const Element x0 = coset.front();
    const Element y0 = field.element(values[x0.index()]);
    if (y0.is_zero()) return std::nullopt;
    bool found = false;
    for (u64 cand = 1; cand < field.q() && !found; ++cand) {
      const Element ai = y0 / x0.pow_u(cand);
      found = std::all_of(coset.begin(), coset.end(),
                          [&](const Element& x) { return values[x.index()] == (ai * x.pow_u(cand)).index(); });
      if (found) {
        a.push_back(ai);
        r.push_back(cand);
      }
    }
    if (!found) return std::nullopt;
  }
  return CycloMapping(cp, std::move(a), std::move(r));
}

std::optional<CycloMapping> fit_mapping_any(const SparsePoly& f, u64 cap) {
  for (u64 d : nt::divisors(f.field().q() - 1)) {
    if (auto m = fit_mapping(f, d, cap)) return m;
  }
  return std::nullopt;
}

namespace {

// A monomial piece a x^r restricted to D_i, seen through positions: the k-th
// element xi^(kd+i) of D_i goes to the ((base + k * slope) mod s)-th element
// of D_target.
struct Piece {
  u64 r;
  u64 a;
  u64 target;
  u64 base;
  u64 slope;
};

class XiLog {
 public:
  explicit XiLog(const Field& f) : field_(f) {
    if (!f.has_tables()) table_.emplace(f.xi());
  }
  u64 operator()(u64 y) const {
    if (!table_) return field_.log_table(y);
    return *table_->solve(field_.element(y));
  }

 private:
  const Field& field_;
  std::optional<DiscreteLog> table_;
};

struct Candidate {
  std::vector<u64> r;
  std::vector<u64> a;
  friend bool operator<(const Candidate& x, const Candidate& y) {
    return std::tie(x.r, x.a) < std::tie(y.r, y.a);
  }
};

class InvolutionSearch {
 public:
  InvolutionSearch(std::vector<std::vector<Piece>> pieces, u64 s) : pieces_(std::move(pieces)), s_(s) {
    chosen_.assign(pieces_.size(), nullptr);
  }

  std::vector<Candidate> run() {
    recurse(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // second o first = identity on the domain coset of first.
  bool undoes(const Piece& first, const Piece& second) const {
    if (s_ == 1) return true;
    const u64 slope = nt::mulmod(first.slope, second.slope, s_);
    const u64 offset = (second.base + nt::mulmod(first.base, second.slope, s_)) % s_;
    return slope == 1 && offset == 0;
  }

  void recurse(std::size_t i) {
    while (i < chosen_.size() && chosen_[i] != nullptr) ++i;
    if (i == chosen_.size()) {
      Candidate c;
      for (const Piece* p : chosen_) {
        c.r.push_back(p->r);
        c.a.push_back(p->a);
      }
      found_.push_back(std::move(c));
      return;
    }
    for (const Piece& p : pieces_[i]) {
      const u64 j = p.target;
      if (j == i) {
        if (!undoes(p, p)) continue;
        chosen_[i] = &p;
        recurse(i + 1);
        chosen_[i] = nullptr;
      } else if (j > i && chosen_[j] == nullptr) {
        for (const Piece& back : pieces_[j]) {
          if (back.target != i || !undoes(p, back)) continue;
          chosen_[i] = &p;
          chosen_[j] = &back;
          recurse(i + 1);
          chosen_[j] = nullptr;
        }
        chosen_[i] = nullptr;
      }
    }
  }

  std::vector<std::vector<Piece>> pieces_;
  u64 s_;
  std::vector<const Piece*> chosen_;
  std::vector<Candidate> found_;
};

}  // namespace

std::vector<SelfInverseEntry> search_self_inverse(const FieldPtr& field, const SelfInverseOptions& opts) {
  const u64 q = field->q();
  require_within_cap(q, opts.cap, "search_self_inverse");
  const u64 group = q - 1;

  std::vector<u64> a_set = opts.a_set;
  if (a_set.empty()) {
    for (u64 c = 1; c < q; ++c) a_set.push_back(c);
  }
  std::sort(a_set.begin(), a_set.end());
  a_set.erase(std::unique(a_set.begin(), a_set.end()), a_set.end());
  for (u64 c : a_set) {
    if (c == 0 || c >= q) throw std::invalid_argument("coefficient set must hold nonzero field elements");
  }
  std::vector<u64> d_values = opts.d_values.empty() ? nt::divisors(group) : opts.d_values;
  std::sort(d_values.begin(), d_values.end());

  const XiLog log_xi(*field);
  std::set<SparsePoly::Terms> seen;
  std::vector<SelfInverseEntry> catalog;

  for (u64 d : d_values) {
    const CycloParams cp(field, d);
    const u64 s = cp.s();

    // Pieces per coset, keeping the first (smallest r, then a) representative
    // of each distinct restricted function.
    std::vector<std::vector<Piece>> pieces(d);
    for (u64 i = 0; i < d; ++i) {
      std::set<std::pair<u64, u64>> keys;
      for (u64 r = 1; r <= opts.max_r; ++r) {
        if (nt::gcd(r % s, s) != 1) continue;
        for (u64 a : a_set) {
          const u64 offset = (log_xi(a) + nt::mulmod(i, r % group, group)) % group;
          if (!keys.emplace(offset, r % s).second) continue;
          const u64 target = offset % d;
          pieces[i].push_back({r, a, target, (offset - target) / d, r % s});
        }
      }
    }

    for (const Candidate& c : InvolutionSearch(std::move(pieces), s).run()) {
      std::vector<Element> a;
      for (u64 ai : c.a) a.push_back(field->element(ai));
      CycloMapping m(cp, std::move(a), c.r);
      SparsePoly poly = mapping_to_poly(m);
      if (seen.contains(poly.terms())) continue;
      if (!(invert_theorem33(m).inverse == poly)) {
        throw std::logic_error("search_self_inverse: closed-form inverse disagrees with an involution");
      }
      const std::vector<u64> values = value_table(poly, opts.cap);
      bool involution = true;
      for (u64 x = 0; x < q && involution; ++x) involution = values[values[x]] == x;
      if (!involution) throw std::logic_error("search_self_inverse: candidate is not an involution");
      seen.insert(poly.terms());
      catalog.push_back({std::move(m), std::move(poly), Verification::exhaustive});
    }
  }
  return catalog;
}

}  // namespace ppforge
