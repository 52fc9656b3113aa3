// Exhaustive countermodel search over small interpretations. Individual 0 is
// the point violating the queried GCI and individuals 1..k-1 carry
// non-decreasing colors, which removes most renaming symmetry without losing
// any isomorphism class.

#include <cstdint>

#include "alc/reasoner.hpp"

namespace alc {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxSize = 8;

enum class Op : std::uint8_t { Top, Bot, Atom, And, Or, Not, Exists, Forall };

struct Instr {
  Op op;
  std::size_t ref;
};

/// Postfix program evaluating a concept to a bitmask of individuals.
class Program {
public:
  Program(const Concept &c, const Signature &sig) { emit(c, sig); }

  template <typename Succ>
  Mask eval(const Mask *atoms, const Succ &succ, std::size_t n) const {
    Mask stack[64];
    std::size_t sp = 0;
    const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    for (const auto &in : code_) {
      switch (in.op) {
      case Op::Top: stack[sp++] = full; break;
      case Op::Bot: stack[sp++] = 0; break;
      case Op::Atom: stack[sp++] = atoms[in.ref]; break;
      case Op::And: --sp; stack[sp - 1] &= stack[sp]; break;
      case Op::Or: --sp; stack[sp - 1] |= stack[sp]; break;
      case Op::Not: stack[sp - 1] = ~stack[sp - 1] & full; break;
      case Op::Exists:
      case Op::Forall: {
        const Mask filler = stack[sp - 1];
        Mask out = 0;
        for (std::size_t x = 0; x < n; ++x) {
          const Mask s = succ(in.ref, x);
          const bool holds = in.op == Op::Exists ? (s & filler) != 0 : (s & ~filler) == 0;
          if (holds) out |= Mask{1} << x;
        }
        stack[sp - 1] = out;
        break;
      }
      }
    }
    return stack[0];
  }

  std::size_t max_stack() const { return max_stack_; }

private:
  std::size_t emit(const Concept &c, const Signature &sig) {
    switch (c.kind()) {
    case ConceptKind::Top:
      code_.push_back({Op::Top, 0});
      return 1;
    case ConceptKind::Bot:
      code_.push_back({Op::Bot, 0});
      return 1;
    case ConceptKind::Name: {
      auto idx = sig.concept_index(c.label());
      if (!idx) throw UnknownName(c.label(), 0);
      code_.push_back({Op::Atom, *idx});
      return track(1);
    }
    case ConceptKind::And:
    case ConceptKind::Or: {
      const auto l = emit(c.first(), sig);
      const auto r = emit(c.second(), sig);
      code_.push_back({c.kind() == ConceptKind::And ? Op::And : Op::Or, 0});
      return track(std::max(l, r + 1));
    }
    case ConceptKind::Not: {
      const auto d = emit(c.first(), sig);
      code_.push_back({Op::Not, 0});
      return d;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      auto idx = sig.role_index(c.label());
      if (!idx) throw UnknownName(c.label(), 0);
      const auto d = emit(c.first(), sig);
      code_.push_back({c.kind() == ConceptKind::Exists ? Op::Exists : Op::Forall, *idx});
      return d;
    }
    }
    return 1;
  }

  std::size_t track(std::size_t d) {
    if (d > 64) throw SearchBudgetExceeded("concept too deep for the countermodel search");
    max_stack_ = std::max(max_stack_, d);
    return d;
  }

  std::vector<Instr> code_;
  std::size_t max_stack_ = 1;
};

struct CompiledAxiom {
  Program lhs;
  Program rhs;
  bool equiv;
};

} // namespace

std::optional<Interpretation> bounded_countermodel(const Theory &t, const Gci &g, const Signature &sig,
                                                   CountermodelOptions opts) {
  if (opts.max_size < 1) throw SearchBudgetExceeded("max_size must be at least 1");
  if (opts.max_size > kMaxSize)
    throw SearchBudgetExceeded("max_size above " + std::to_string(kMaxSize) + " is not supported");
  if (g.kind == Gci::Kind::FixDef) throw UnsupportedAxiom("fixpoint definitions are model-checked only");

  std::vector<CompiledAxiom> axioms;
  for (const auto &a : t) {
    if (a.kind == Gci::Kind::FixDef) throw UnsupportedAxiom("fixpoint definitions are model-checked only");
    axioms.push_back({Program(a.lhs, sig), Program(a.rhs, sig), a.kind == Gci::Kind::Equiv});
  }
  const Program query_lhs(g.lhs, sig);
  const Program query_rhs(g.rhs, sig);
  const bool query_equiv = g.kind == Gci::Kind::Equiv;

  const std::size_t nc = sig.concept_names().size();
  const std::size_t nr = sig.role_names().size();
  if (nc > 16) throw SearchBudgetExceeded("too many concept names for the countermodel search");
  const std::size_t colors = std::size_t{1} << nc;
  std::size_t examined = 0;

  for (std::size_t k = 1; k <= opts.max_size; ++k) {
    const std::size_t role_bits = k * k * nr;
    if (role_bits >= 63) throw SearchBudgetExceeded("role space too large for the countermodel search");
    const std::uint64_t role_space = std::uint64_t{1} << role_bits;
    const Mask row = (Mask{1} << k) - 1;

    std::vector<std::size_t> color(k, 0);
    for (;;) {
      Mask atoms[16] = {};
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t c = 0; c < nc; ++c)
          if ((color[x] >> c) & 1U) atoms[c] |= Mask{1} << x;

      for (std::uint64_t roles = 0; roles < role_space; ++roles) {
        if (++examined > opts.budget) throw SearchBudgetExceeded("countermodel search budget exhausted");
        auto succ = [&](std::size_t r, std::size_t x) {
          return static_cast<Mask>((roles >> ((r * k + x) * k)) & row);
        };
        const Mask l = query_lhs.eval(atoms, succ, k);
        const Mask r = query_rhs.eval(atoms, succ, k);
        const bool violated = query_equiv ? ((l ^ r) & 1U) : ((l & ~r) & 1U);
        if (!violated) continue;
        bool model = true;
        for (const auto &ax : axioms) {
          const Mask al = ax.lhs.eval(atoms, succ, k);
          const Mask ar = ax.rhs.eval(atoms, succ, k);
          if (ax.equiv ? al != ar : (al & ~ar) != 0) {
            model = false;
            break;
          }
        }
        if (!model) continue;

        std::vector<std::string> names;
        for (std::size_t x = 0; x < k; ++x) names.push_back("m" + std::to_string(x));
        std::vector<Subset> ext(nc, Subset(k));
        for (std::size_t c = 0; c < nc; ++c)
          for (std::size_t x = 0; x < k; ++x)
            if ((atoms[c] >> x) & 1U) ext[c].set(x);
        std::vector<std::vector<Interpretation::Edge>> edges(nr);
        for (std::size_t ri = 0; ri < nr; ++ri)
          for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y)
              if ((succ(ri, x) >> y) & 1U) edges[ri].emplace_back(x, y);
        return Interpretation(sig, std::move(names), std::move(ext), std::move(edges));
      }

      // next coloring: individual 0 free, the rest non-decreasing
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (color[pos] + 1 < colors) {
          ++color[pos];
          if (pos > 0)
            for (std::size_t q = pos + 1; q < k; ++q) color[q] = color[pos];
          else
            for (std::size_t q = 1; q < k; ++q) color[q] = 0;
          break;
        }
        if (pos == 0) {
          pos = k + 1; // exhausted
          break;
        }
      }
      if (pos == k + 1 || k == 0) break;
    }
  }
  return std::nullopt;
}

} // namespace alc
