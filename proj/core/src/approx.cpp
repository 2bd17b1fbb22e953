#include "ihstar/approx.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ihstar/translate.hpp"

namespace ihstar {

std::string rewrite_case_name(RewriteCase c) {
  switch (c) {
    case RewriteCase::Case1: return "1";
    case RewriteCase::Case2: return "2";
    case RewriteCase::Case3: return "3";
    case RewriteCase::Case4a: return "4a";
    case RewriteCase::Case4b: return "4b";
    case RewriteCase::Case4ci: return "4ci";
    case RewriteCase::Case4cii: return "4cii";
    case RewriteCase::Case4ciii: return "4ciii";
    case RewriteCase::Case4civFirst: return "4civ-first";
    case RewriteCase::Case4civSecond: return "4civ-second";
  }
  throw std::logic_error("unreachable");
}

std::string RewriteTrace::dump() const {
  std::ostringstream os;
  for (const RewriteStep& s : steps) {
    os << "case " << rewrite_case_name(s.rule) << ' ' << s.input_measure.str()
       << " subgoals=" << s.subgoals.size() << '\n';
  }
  return os.str();
}

namespace {

// Equivalence-preserving constant folding applied when results are
// recombined; decomposition always works on the unfolded inputs.
Formula s_conj2(const Formula& a, const Formula& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  if (a.is_bot() || b.is_bot()) return Formula::bot();
  if (a == b) return a;
  return Formula::conj(a, b);
}

Formula s_disj2(const Formula& a, const Formula& b) {
  if (a.is_bot()) return b;
  if (b.is_bot()) return a;
  if (a.is_top() || b.is_top()) return Formula::top();
  if (a == b) return a;
  return Formula::disj(a, b);
}

Formula s_imp(const Formula& a, const Formula& b) {
  if (b.is_top() || a.is_bot()) return Formula::top();
  if (a.is_top()) return b;
  if (a == b) return Formula::top();
  return Formula::imp(a, b);
}

Formula conj_set(std::vector<Formula> parts) {
  std::vector<Formula> keep;
  for (Formula& f : parts) {
    if (f.is_top()) continue;
    if (f.is_bot()) return Formula::bot();
    keep.push_back(std::move(f));
  }
  return unflatten_and(std::move(keep));
}

std::vector<Formula> canonical_set(std::vector<Formula> v) {
  std::sort(v.begin(), v.end(),
            [](const Formula& a, const Formula& b) { return Formula::cmp(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Path (sequence of 0 = left, 1 = right) to the first pre-order occurrence
// of kind `k` reachable through conjunctions and disjunctions only.
bool find_outer(const Formula& f, Kind k, std::vector<int>& path) {
  if (f.kind() == k) return true;
  if (!f.is_and() && !f.is_or()) return false;
  path.push_back(0);
  if (find_outer(f.left(), k, path)) return true;
  path.back() = 1;
  if (find_outer(f.right(), k, path)) return true;
  path.pop_back();
  return false;
}

Formula node_at(const Formula& f, const std::vector<int>& path, std::size_t i) {
  if (i == path.size()) return f;
  return node_at(path[i] == 0 ? f.left() : f.right(), path, i + 1);
}

Formula rebuild_at(const Formula& f, const std::vector<int>& path, std::size_t i,
                   const Formula& repl) {
  if (i == path.size()) return repl;
  Formula l = f.left(), r = f.right();
  if (path[i] == 0)
    l = rebuild_at(l, path, i + 1, repl);
  else
    r = rebuild_at(r, path, i + 1, repl);
  return f.is_and() ? Formula::conj(l, r) : Formula::disj(l, r);
}

struct Ctx {
  bool dagger = false;
  RewriteTrace* trace = nullptr;
  std::unordered_map<Formula, Formula, FormulaHash> memo;
};

void record(Ctx& ctx, RewriteCase rule, const MeasureTuple& m,
            std::vector<Formula> subgoals) {
  for (const Formula& g : subgoals) {
    MeasureTuple gm = measure(g);
    if (!(gm < m)) {
      std::ostringstream os;
      os << "approximation: case " << rewrite_case_name(rule)
         << " failed to decrease the measure: input " << m.str() << ", subgoal "
         << gm.str() << " for " << g.str();
      throw std::logic_error(os.str());
    }
  }
  if (ctx.trace)
    ctx.trace->steps.push_back(RewriteStep{rule, m, std::move(subgoals)});
}

Formula star_rec(const Formula& a, Ctx& ctx) {
  if (auto it = ctx.memo.find(a); it != ctx.memo.end()) return it->second;
  const MeasureTuple m = measure(a);
  Formula out = Formula::top();

  if (a.is_atomic()) {
    record(ctx, RewriteCase::Case1, m, {});
    out = a;
  } else if (a.is_box()) {
    if (ctx.dagger) {
      record(ctx, RewriteCase::Case1, m, {a.body()});
      out = Formula::box(star_rec(a.body(), ctx));
    } else {
      record(ctx, RewriteCase::Case1, m, {});
      out = a;
    }
  } else if (a.is_and()) {
    record(ctx, RewriteCase::Case2, m, {a.left(), a.right()});
    out = s_conj2(star_rec(a.left(), ctx), star_rec(a.right(), ctx));
  } else if (a.is_or()) {
    record(ctx, RewriteCase::Case3, m, {a.left(), a.right()});
    out = s_disj2(star_rec(a.left(), ctx), star_rec(a.right(), ctx));
  } else {
    const Formula b = a.left(), c = a.right();
    std::vector<int> path;
    if (find_outer(c, Kind::And, path)) {
      // 4.a: split the leftmost outer conjunction of the consequent
      Formula occ = node_at(c, path, 0);
      Formula g1 = Formula::imp(b, rebuild_at(c, path, 0, occ.left()));
      Formula g2 = Formula::imp(b, rebuild_at(c, path, 0, occ.right()));
      record(ctx, RewriteCase::Case4a, m, {g1, g2});
      out = s_conj2(star_rec(g1, ctx), star_rec(g2, ctx));
    } else if (path.clear(), find_outer(b, Kind::Or, path)) {
      // 4.b: split the leftmost outer disjunction of the antecedent
      Formula occ = node_at(b, path, 0);
      Formula g1 = Formula::imp(rebuild_at(b, path, 0, occ.left()), c);
      Formula g2 = Formula::imp(rebuild_at(b, path, 0, occ.right()), c);
      record(ctx, RewriteCase::Case4b, m, {g1, g2});
      out = s_conj2(star_rec(g1, ctx), star_rec(g2, ctx));
    } else {
      const std::vector<Formula> x = canonical_set(flatten_and(b));
      auto without = [&x](const Formula& f) {
        std::vector<Formula> rest;
        for (const Formula& e : x)
          if (!(e == f)) rest.push_back(e);
        return rest;
      };

      const Formula* pick = nullptr;
      bool has_top = false, has_bot = false;
      for (const Formula& e : x) {
        if (!pick && (e.is_atom() || e.is_box())) pick = &e;
        has_top |= e.is_top();
        has_bot |= e.is_bot();
      }

      if (pick) {
        // 4.c.i: pull an atomic or boxed conjunct in front
        Formula sub = imp_of(without(*pick), c);
        record(ctx, RewriteCase::Case4ci, m, {*pick, sub});
        out = s_imp(star_rec(*pick, ctx), star_rec(sub, ctx));
      } else if (has_top) {
        Formula sub = imp_of(without(Formula::top()), c);
        record(ctx, RewriteCase::Case4cii, m, {sub});
        out = star_rec(sub, ctx);
      } else if (has_bot) {
        record(ctx, RewriteCase::Case4ciii, m, {});
        out = Formula::top();
      } else {
        // 4.c.iv: X contains only implications
        std::vector<Formula> zs;
        for (const Formula& d : x) zs.push_back(d.left());
        zs.push_back(c);
        zs = canonical_set(std::move(zs));

        std::vector<Formula> subgoals;
        for (const Formula& d : x) {
          std::vector<Formula> parts = without(d);
          parts.push_back(d.right());
          subgoals.push_back(imp_of(std::move(parts), c));
        }

        Formula a0 = bracket_set(b, zs);
        RewriteCase branch;
        if (measure(a0) < m) {
          branch = RewriteCase::Case4civFirst;
        } else {
          a0 = bracket_prime_set(b, zs);
          branch = RewriteCase::Case4civSecond;
        }
        subgoals.push_back(a0);
        record(ctx, branch, m, subgoals);

        std::vector<Formula> results;
        for (const Formula& g : subgoals) results.push_back(star_rec(g, ctx));
        out = conj_set(std::move(results));
      }
    }
  }

  ctx.memo.emplace(a, out);
  return out;
}

}  // namespace

ApproxResult nnil_star(const Formula& a) {
  ApproxResult r{Formula::top(), {}};
  Ctx ctx;
  ctx.trace = &r.trace;
  r.result = star_rec(a, ctx);
  return r;
}

namespace {

Formula plus_rec(const Formula& a,
                 std::unordered_map<Formula, Formula, FormulaHash>& memo) {
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  BoxedAbstraction abs = boxed_abstraction(a);
  Ctx ctx;
  Formula starred = star_rec(abs.skeleton, ctx);
  std::vector<std::pair<std::string, Formula>> sub;
  sub.reserve(abs.bindings.size());
  for (const auto& [name, boxed] : abs.bindings)
    sub.emplace_back(name, Formula::box(plus_rec(boxed.body(), memo)));
  Formula res = substitute(starred, sub);
  memo.emplace(a, res);
  return res;
}

}  // namespace

Formula tnnil_plus(const Formula& a) {
  std::unordered_map<Formula, Formula, FormulaHash> memo;
  return plus_rec(a, memo);
}

Formula tnnil_minus(const Formula& a) {
  BoxedAbstraction abs = boxed_abstraction(a);
  std::unordered_map<Formula, Formula, FormulaHash> memo;
  std::vector<std::pair<std::string, Formula>> sub;
  sub.reserve(abs.bindings.size());
  for (const auto& [name, boxed] : abs.bindings)
    sub.emplace_back(name, Formula::box(plus_rec(boxed.body(), memo)));
  return substitute(abs.skeleton, sub);
}

Formula tnnil_dagger(const Formula& a) { return tnnil_dagger_traced(a).result; }

ApproxResult tnnil_dagger_traced(const Formula& a) {
  ApproxResult r{Formula::top(), {}};
  Ctx ctx;
  ctx.dagger = true;
  ctx.trace = &r.trace;
  r.result = star_rec(a, ctx);
  return r;
}

}  // namespace ihstar
