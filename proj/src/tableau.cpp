// Tableau for ALC concept satisfiability w.r.t. a general TBox.
//
// Concepts are converted to NNF and hash-consed into a pool closed under
// negation, so node labels are fixed-width bitsets over pool ids. The TBox
// is internalized: every node label starts with ⊓(¬C ⊔ D). Expansion is
// depth-first: a node is saturated under ⊓ and unit propagation on ⊔, then
// branched on the remaining ⊔ (left disjunct first, the right branch adds the
// negation of the left), and once propositionally complete it is either
// blocked by an ancestor whose label contains its own, or gets one successor
// per ∃r.C. Without inverse roles a successor never affects its ancestors,
// so an unsatisfiable successor label is cached and refutes the branch.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <unordered_set>

#include "alc/reasoner.hpp"

namespace alc {

const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Entailed: return "entailed";
  case Verdict::NotEntailed: return "not entailed";
  case Verdict::Sat: return "satisfiable";
  case Verdict::Unsat: return "unsatisfiable";
  case Verdict::Timeout: return "timeout";
  }
  return "?";
}

namespace {

enum class Kind { Top, Bot, Atom, NegAtom, And, Or, Exists, Forall };

struct PoolNode {
  Kind kind;
  std::size_t ref = 0; // concept index for atoms, role index for quantifiers
  std::vector<int> args;
  int neg = -1;
};

class ConceptPool {
public:
  explicit ConceptPool(const Signature &sig) : sig_(sig) {
    top_ = intern(Kind::Top, 0, {});
    bot_ = intern(Kind::Bot, 0, {});
  }

  int top() const { return top_; }
  int bot() const { return bot_; }
  const PoolNode &operator[](int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

  int from(const Concept &c, bool negated) {
    switch (c.kind()) {
    case ConceptKind::Top:
      return negated ? bot_ : top_;
    case ConceptKind::Bot:
      return negated ? top_ : bot_;
    case ConceptKind::Name: {
      auto idx = sig_.concept_index(c.label());
      if (!idx) throw UnknownName(c.label(), 0);
      return intern(negated ? Kind::NegAtom : Kind::Atom, *idx, {});
    }
    case ConceptKind::Not:
      return from(c.first(), !negated);
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<int> args{from(c.first(), negated), from(c.second(), negated)};
      return ((c.kind() == ConceptKind::And) != negated) ? make_and(std::move(args)) : make_or(std::move(args));
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      auto idx = sig_.role_index(c.label());
      if (!idx) throw UnknownName(c.label(), 0);
      int filler = from(c.first(), negated);
      const bool exists = (c.kind() == ConceptKind::Exists) != negated;
      return intern(exists ? Kind::Exists : Kind::Forall, *idx, {filler});
    }
    }
    return top_;
  }

  int make_and(std::vector<int> args) { return make_nary(Kind::And, std::move(args)); }
  int make_or(std::vector<int> args) { return make_nary(Kind::Or, std::move(args)); }

  /// Computes neg for every node, interning new nodes as needed.
  void close_under_negation() {
    for (std::size_t id = 0; id < nodes_.size(); ++id) negate(static_cast<int>(id));
  }

private:
  int intern(Kind kind, std::size_t ref, std::vector<int> args) {
    auto key = std::make_tuple(static_cast<int>(kind), ref, args);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(PoolNode{kind, ref, std::move(args), -1});
    index_.emplace(std::move(key), id);
    return id;
  }

  // Flattens, deduplicates and absorbs ⊤/⊥, so that n-ary nodes are
  // canonical and negation is an involution on the pool.
  int make_nary(Kind kind, std::vector<int> args) {
    const int unit = kind == Kind::And ? top_ : bot_;
    const int zero = kind == Kind::And ? bot_ : top_;
    std::vector<int> flat;
    for (int a : args) {
      if (nodes_[static_cast<std::size_t>(a)].kind == kind) {
        const auto &inner = nodes_[static_cast<std::size_t>(a)].args;
        flat.insert(flat.end(), inner.begin(), inner.end());
      } else {
        flat.push_back(a);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (std::find(flat.begin(), flat.end(), zero) != flat.end()) return zero;
    flat.erase(std::remove(flat.begin(), flat.end(), unit), flat.end());
    if (flat.empty()) return unit;
    if (flat.size() == 1) return flat.front();
    return intern(kind, 0, std::move(flat));
  }

  int negate(int id) {
    if (nodes_[static_cast<std::size_t>(id)].neg >= 0) return nodes_[static_cast<std::size_t>(id)].neg;
    const PoolNode node = nodes_[static_cast<std::size_t>(id)];
    int n = -1;
    switch (node.kind) {
    case Kind::Top: n = bot_; break;
    case Kind::Bot: n = top_; break;
    case Kind::Atom: n = intern(Kind::NegAtom, node.ref, {}); break;
    case Kind::NegAtom: n = intern(Kind::Atom, node.ref, {}); break;
    case Kind::And:
    case Kind::Or: {
      std::vector<int> args;
      for (int a : node.args) args.push_back(negate(a));
      n = node.kind == Kind::And ? make_or(std::move(args)) : make_and(std::move(args));
      break;
    }
    case Kind::Exists:
    case Kind::Forall:
      n = intern(node.kind == Kind::Exists ? Kind::Forall : Kind::Exists, node.ref, {negate(node.args[0])});
      break;
    }
    nodes_[static_cast<std::size_t>(id)].neg = n;
    nodes_[static_cast<std::size_t>(n)].neg = id;
    return n;
  }

  const Signature &sig_;
  std::vector<PoolNode> nodes_;
  std::map<std::tuple<int, std::size_t, std::vector<int>>, int> index_;
  int top_ = -1;
  int bot_ = -1;
};

struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}

  bool test(int i) const { return (words[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

  bool subset_of(const Bits &o) const {
    for (std::size_t w = 0; w < words.size(); ++w)
      if (words[w] & ~o.words[w]) return false;
    return true;
  }

  template <typename Fn>
  void for_each(Fn &&fn) const {
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        fn(static_cast<int>(w * 64) + b);
      }
    }
  }

  friend bool operator==(const Bits &a, const Bits &b) { return a.words == b.words; }
};

struct BitsHash {
  std::size_t operator()(const Bits &b) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : b.words) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

struct Exhausted {};

struct BuiltNode {
  Bits label;
  std::vector<std::pair<std::size_t, int>> edges; // (role, child node)
  int blocked_by = -1;
};

class Tableau {
public:
  Tableau(const ConceptPool &pool, Bits tbox, std::size_t budget)
      : pool_(pool), tbox_(std::move(tbox)), budget_(budget) {}

  /// Returns the root node of a clash-free completion, or -1 if the concept
  /// is unsatisfiable. Throws Exhausted when the budget runs out.
  int solve(int concept_id) {
    Bits root = tbox_;
    root.set(concept_id);
    return expand(std::move(root));
  }

  std::size_t expansions() const { return expansions_; }
  const std::vector<BuiltNode> &nodes() const { return built_; }

private:
  bool saturate(Bits &label) const {
    bool changed = true;
    while (changed) {
      changed = false;
      bool clash = false;
      label.for_each([&](int id) {
        if (clash) return;
        const PoolNode &node = pool_[id];
        if (node.kind == Kind::Bot || label.test(node.neg)) {
          clash = true;
          return;
        }
        if (node.kind == Kind::And) {
          for (int a : node.args)
            if (!label.test(a)) {
              label.set(a);
              changed = true;
            }
        } else if (node.kind == Kind::Or) {
          int open = -1;
          int open_count = 0;
          for (int a : node.args) {
            if (label.test(a)) return;
            if (!label.test(pool_[a].neg)) {
              open = a;
              ++open_count;
            }
          }
          if (open_count == 0) {
            clash = true;
          } else if (open_count == 1) {
            label.set(open);
            changed = true;
          }
        }
      });
      if (clash) return false;
    }
    return true;
  }

  // Open disjunct of the unresolved disjunction with fewest open disjuncts.
  int pick_disjunct(const Bits &label) const {
    int best = -1;
    int best_count = 0;
    label.for_each([&](int id) {
      const PoolNode &node = pool_[id];
      if (node.kind != Kind::Or) return;
      int first_open = -1;
      int count = 0;
      for (int a : node.args) {
        if (label.test(a)) return;
        if (!label.test(pool_[a].neg)) {
          if (first_open < 0) first_open = a;
          ++count;
        }
      }
      if (best < 0 || count < best_count) {
        best = first_open;
        best_count = count;
      }
    });
    return best;
  }

  int expand(Bits label) {
    if (++expansions_ > budget_) throw Exhausted{};
    if (!saturate(label)) return -1;

    if (const int d = pick_disjunct(label); d >= 0) {
      Bits left = label;
      left.set(d);
      if (int r = expand(std::move(left)); r >= 0) return r;
      label.set(pool_[d].neg);
      return expand(std::move(label));
    }

    for (std::size_t k = 0; k < ancestors_.size(); ++k) {
      if (label.subset_of(built_[static_cast<std::size_t>(ancestors_[k])].label)) {
        built_.push_back(BuiltNode{std::move(label), {}, ancestors_[k]});
        return static_cast<int>(built_.size() - 1);
      }
    }

    const int id = static_cast<int>(built_.size());
    built_.push_back(BuiltNode{label, {}, -1});
    ancestors_.push_back(id);
    bool ok = true;
    label.for_each([&](int e) {
      if (!ok || pool_[e].kind != Kind::Exists) return;
      const std::size_t role = pool_[e].ref;
      Bits child = tbox_;
      child.set(pool_[e].args[0]);
      label.for_each([&](int f) {
        if (pool_[f].kind == Kind::Forall && pool_[f].ref == role) child.set(pool_[f].args[0]);
      });
      if (unsat_.count(child)) {
        ok = false;
        return;
      }
      const int c = expand(child);
      if (c < 0) {
        unsat_.insert(std::move(child));
        ok = false;
        return;
      }
      built_[static_cast<std::size_t>(id)].edges.emplace_back(role, c);
    });
    ancestors_.pop_back();
    return ok ? id : -1;
  }

  const ConceptPool &pool_;
  Bits tbox_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<BuiltNode> built_;
  std::vector<int> ancestors_;
  std::unordered_set<Bits, BitsHash> unsat_;
};

// Unravels the completion rooted at `root` into a model: blocked nodes are
// replaced by their blockers.
Interpretation extract_model(const Tableau &tab, const ConceptPool &pool, int root, const Signature &sig) {
  const auto &nodes = tab.nodes();
  auto resolve = [&](int n) {
    while (nodes[static_cast<std::size_t>(n)].blocked_by >= 0) n = nodes[static_cast<std::size_t>(n)].blocked_by;
    return n;
  };
  std::map<int, std::size_t> individual;
  std::vector<int> order;
  auto visit = [&](int n) {
    n = resolve(n);
    if (individual.emplace(n, order.size()).second) order.push_back(n);
    return individual.at(n);
  };
  visit(root);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (auto [role, child] : nodes[static_cast<std::size_t>(order[k])].edges) visit(child);

  const std::size_t n = order.size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(k));
  std::vector<Subset> concepts(sig.concept_names().size(), Subset(n));
  std::vector<std::vector<Interpretation::Edge>> roles(sig.role_names().size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto &node = nodes[static_cast<std::size_t>(order[k])];
    node.label.for_each([&](int id) {
      if (pool[id].kind == Kind::Atom) concepts[pool[id].ref].set(k);
    });
    for (auto [role, child] : node.edges) roles[role].emplace_back(k, individual.at(resolve(child)));
  }
  return Interpretation(sig, std::move(names), std::move(concepts), std::move(roles));
}

void internalize(ConceptPool &pool, const Theory &t, std::vector<int> &constraints) {
  for (const auto &g : t) {
    switch (g.kind) {
    case Gci::Kind::FixDef:
      throw UnsupportedAxiom("fixpoint definitions cannot be given to the tableau: " + render(g));
    case Gci::Kind::Subsumes:
      constraints.push_back(pool.make_or({pool.from(g.lhs, true), pool.from(g.rhs, false)}));
      break;
    case Gci::Kind::Equiv:
      constraints.push_back(pool.make_or({pool.from(g.lhs, true), pool.from(g.rhs, false)}));
      constraints.push_back(pool.make_or({pool.from(g.rhs, true), pool.from(g.lhs, false)}));
      break;
    }
  }
}

QueryResult run(ConceptPool &pool, const std::vector<int> &constraints, int query, const Signature &sig,
                const ReasonerOptions &opts) {
  pool.close_under_negation();
  Bits tbox(pool.size());
  for (int c : constraints) tbox.set(c);
  Tableau tab(pool, std::move(tbox), opts.budget);
  QueryResult out;
  try {
    const int root = tab.solve(query);
    out.expansions = tab.expansions();
    if (root < 0) {
      out.verdict = Verdict::Unsat;
    } else {
      out.verdict = Verdict::Sat;
      if (opts.extract_witness) out.witness = extract_model(tab, pool, root, sig);
    }
  } catch (const Exhausted &) {
    out.verdict = Verdict::Timeout;
    out.expansions = tab.expansions();
  }
  return out;
}

QueryResult subsumption(const Theory &t, const Concept &lhs, const Concept &rhs, const Signature &sig,
                        const ReasonerOptions &opts) {
  ConceptPool pool(sig);
  std::vector<int> constraints;
  internalize(pool, t, constraints);
  const int query = pool.make_and({pool.from(lhs, false), pool.from(rhs, true)});
  QueryResult r = run(pool, constraints, query, sig, opts);
  if (r.verdict == Verdict::Sat) r.verdict = Verdict::NotEntailed;
  else if (r.verdict == Verdict::Unsat) r.verdict = Verdict::Entailed;
  return r;
}

} // namespace

QueryResult is_satisfiable(const Concept &c, const Theory &t, const Signature &sig, ReasonerOptions opts) {
  ConceptPool pool(sig);
  std::vector<int> constraints;
  internalize(pool, t, constraints);
  const int query = pool.from(c, false);
  return run(pool, constraints, query, sig, opts);
}

QueryResult entails(const Theory &t, const Gci &g, const Signature &sig, ReasonerOptions opts) {
  switch (g.kind) {
  case Gci::Kind::Subsumes:
    return subsumption(t, g.lhs, g.rhs, sig, opts);
  case Gci::Kind::Equiv: {
    QueryResult forward = subsumption(t, g.lhs, g.rhs, sig, opts);
    if (forward.verdict == Verdict::NotEntailed) return forward;
    QueryResult backward = subsumption(t, g.rhs, g.lhs, sig, opts);
    backward.expansions += forward.expansions;
    if (backward.verdict == Verdict::Entailed && forward.verdict == Verdict::Timeout)
      backward.verdict = Verdict::Timeout;
    return backward;
  }
  case Gci::Kind::FixDef:
    break;
  }
  throw UnsupportedAxiom("fixpoint definitions are model-checked only: " + render(g));
}

} // namespace alc
