#include "alc/models.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace alc {

IndividualMap IndividualMap::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  std::iota(t.begin(), t.end(), 0);
  return IndividualMap(std::move(t));
}

bool IndividualMap::injective() const {
  auto sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool IndividualMap::surjective(std::size_t target_size) const {
  std::vector<bool> hit(target_size, false);
  for (auto b : table_)
    if (b < target_size) hit[b] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

IndividualMap parse_individual_map(std::string_view text, const Interpretation &src, const Interpretation &dst) {
  std::vector<std::optional<std::size_t>> table(src.size());
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    // strip a comment: '#' at the start of a token
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
        line.resize(i);
        break;
      }
    }
    auto arrow = line.find("->");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (arrow == std::string::npos) throw InvalidModel("expected 'src -> dst'", line_no);
    auto from = trim(line.substr(0, arrow));
    auto to = trim(line.substr(arrow + 2));
    auto a = src.individual_index(from);
    if (!a) throw InvalidModel("'" + from + "' is not an individual of the source model", line_no);
    auto b = dst.individual_index(to);
    if (!b) throw InvalidModel("'" + to + "' is not an individual of the target model", line_no);
    if (table[*a]) throw InvalidModel("'" + from + "' is mapped twice", line_no);
    table[*a] = *b;
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!table[a]) throw InvalidModel("the map is not total: '" + src.individual(a) + "' has no image");
    out.push_back(*table[a]);
  }
  return IndividualMap(std::move(out));
}

std::string MorphismWitness::describe(const Interpretation &src, const Interpretation &dst) const {
  const auto &a = src.individual(source);
  switch (condition) {
  case Condition::ConceptForward:
    return a + " is in " + name + " but its image is not";
  case Condition::ConceptBackward:
    return a + " is not in " + name + " but its image is";
  case Condition::RoleForward:
    return "(" + a + ", " + src.individual(*other) + ") is in " + name + " but the image pair is not";
  case Condition::RoleBackward:
    return "the image of " + a + " has " + name + "-successor " + dst.individual(*other) + " with no lifting from " + a;
  }
  return {};
}

std::string MorphismCheck::flags() const {
  if (iso) return "iso";
  if (mono && epi) return "mono, epi";
  if (mono) return "mono";
  if (epi) return "epi";
  return "plain";
}

MorphismCheck check_morphism(const IndividualMap &m, const Interpretation &src, const Interpretation &dst) {
  if (!(src.signature() == dst.signature())) throw SignatureMismatch("models have different signatures");
  if (m.size() != src.size()) throw InvalidModel("map is not total on the source carrier");
  for (auto b : m.table())
    if (b >= dst.size()) throw InvalidModel("map image outside the target carrier");

  using C = MorphismWitness::Condition;
  MorphismCheck out;
  const auto &sig = src.signature();

  for (std::size_t c = 0; c < sig.concept_names().size(); ++c) {
    const auto &in_src = src.concept_extension(c);
    const auto &in_dst = dst.concept_extension(c);
    for (std::size_t a = 0; a < src.size(); ++a) {
      const bool s = in_src.test(a);
      const bool d = in_dst.test(m(a));
      if (s != d) {
        out.witness = MorphismWitness{s ? C::ConceptForward : C::ConceptBackward, sig.concept_names()[c], a, {}};
        return out;
      }
    }
  }

  for (std::size_t r = 0; r < sig.role_names().size(); ++r) {
    for (std::size_t a = 0; a < src.size(); ++a) {
      const Subset &succ = src.successors(r, a);
      Subset image(dst.size());
      for (auto b = succ.find_first(); b != Subset::npos; b = succ.find_next(b)) {
        if (!dst.has_edge(r, m(a), m(b))) {
          out.witness = MorphismWitness{C::RoleForward, sig.role_names()[r], a, b};
          return out;
        }
        image.set(m(b));
      }
      // every target successor of μ(a) must be the image of a successor of a
      const Subset missing = dst.successors(r, m(a)) - image;
      if (missing.any()) {
        out.witness = MorphismWitness{C::RoleBackward, sig.role_names()[r], a, missing.find_first()};
        return out;
      }
    }
  }

  out.is_morphism = true;
  out.mono = m.injective();
  out.epi = m.surjective(dst.size());
  out.iso = out.mono && out.epi;
  return out;
}

Interpretation coproduct(const std::vector<Interpretation> &models) {
  if (models.empty()) throw EmptyFamily("coproduct of an empty family");
  const Signature &sig = models.front().signature();
  for (const auto &m : models)
    if (!(m.signature() == sig)) throw SignatureMismatch("coproduct components have different signatures");

  std::vector<std::string> names;
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < models.size(); ++k) {
    offset.push_back(names.size());
    for (const auto &a : models[k].individuals()) names.push_back(std::to_string(k) + "#" + a);
  }
  const std::size_t n = names.size();

  std::vector<Subset> concepts(sig.concept_names().size(), Subset(n));
  std::vector<std::vector<Interpretation::Edge>> roles(sig.role_names().size());
  for (std::size_t k = 0; k < models.size(); ++k) {
    const auto &m = models[k];
    for (std::size_t c = 0; c < concepts.size(); ++c) {
      const auto &ext = m.concept_extension(c);
      for (auto a = ext.find_first(); a != Subset::npos; a = ext.find_next(a)) concepts[c].set(offset[k] + a);
    }
    for (std::size_t r = 0; r < roles.size(); ++r)
      for (auto [a, b] : m.role_edges(r)) roles[r].emplace_back(offset[k] + a, offset[k] + b);
  }
  return Interpretation(sig, std::move(names), std::move(concepts), std::move(roles));
}

IndividualMap fold_map(const std::vector<Interpretation> &models) {
  if (models.empty()) throw EmptyFamily("fold of an empty family");
  std::vector<std::size_t> table;
  for (const auto &m : models) {
    if (m.size() != models.front().size()) throw InvalidModel("fold needs components of equal size");
    for (std::size_t a = 0; a < m.size(); ++a) table.push_back(a);
  }
  return IndividualMap(std::move(table));
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : block_of_(n, n) {
  for (auto &b : blocks) {
    if (b.empty()) throw InvalidPartition("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (auto a : blocks[k]) {
      if (a >= n) throw InvalidPartition("block member outside the carrier");
      if (block_of_[a] != n) throw InvalidPartition("blocks are not disjoint");
      block_of_[a] = k;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (block_of_[a] == n) throw InvalidPartition("blocks do not cover the carrier");
  blocks_ = std::move(blocks);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t a = 0; a < n; ++a) blocks.push_back({a});
  return Partition(n, std::move(blocks));
}

bool Partition::refines(const Partition &other) const {
  if (other.universe() != universe()) return false;
  for (const auto &b : blocks_)
    for (auto a : b)
      if (other.block_of(a) != other.block_of(b.front())) return false;
  return true;
}

Partition coarsest_bisimulation(const Interpretation &i) {
  const std::size_t n = i.size();
  const std::size_t roles = i.signature().role_names().size();

  // Each round keys individuals by (current block, per role: set of
  // successor blocks) and renumbers blocks by smallest member.
  std::vector<std::size_t> block(n);
  {
    std::map<Subset, std::size_t> by_color;
    for (std::size_t a = 0; a < n; ++a) block[a] = by_color.emplace(i.color(a), by_color.size()).first->second;
  }
  auto renumber = [n](const std::vector<std::size_t> &raw) {
    std::map<std::size_t, std::size_t> first_seen;
    std::vector<std::size_t> out(n);
    for (std::size_t a = 0; a < n; ++a) out[a] = first_seen.emplace(raw[a], first_seen.size()).first->second;
    return out;
  };
  block = renumber(block);
  std::size_t count = *std::max_element(block.begin(), block.end()) + 1;

  for (;;) {
    using Key = std::pair<std::size_t, std::vector<std::vector<std::size_t>>>;
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (std::size_t a = 0; a < n; ++a) {
      Key key{block[a], std::vector<std::vector<std::size_t>>(roles)};
      for (std::size_t r = 0; r < roles; ++r) {
        const Subset &succ = i.successors(r, a);
        auto &targets = key.second[r];
        for (auto b = succ.find_first(); b != Subset::npos; b = succ.find_next(b)) targets.push_back(block[b]);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      }
      next[a] = ids.emplace(std::move(key), ids.size()).first->second;
    }
    next = renumber(next);
    const std::size_t next_count = ids.size();
    block = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }

  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t a = 0; a < n; ++a) blocks[block[a]].push_back(a);
  return Partition(n, std::move(blocks));
}

Quotient quotient(const Interpretation &i, const Partition &p) {
  if (p.universe() != i.size()) throw InvalidPartition("partition does not match the carrier");
  const auto &blocks = p.blocks();
  const std::size_t nb = blocks.size();
  const auto &sig = i.signature();

  std::vector<std::string> names;
  for (const auto &b : blocks) names.push_back(i.individual(b.front()));
  std::vector<Subset> concepts(sig.concept_names().size(), Subset(nb));
  for (std::size_t c = 0; c < concepts.size(); ++c) {
    const auto &ext = i.concept_extension(c);
    for (auto a = ext.find_first(); a != Subset::npos; a = ext.find_next(a)) concepts[c].set(p.block_of(a));
  }
  std::vector<std::vector<Interpretation::Edge>> roles(sig.role_names().size());
  for (std::size_t r = 0; r < roles.size(); ++r) {
    std::set<Interpretation::Edge> edges;
    for (auto [a, b] : i.role_edges(r)) edges.emplace(p.block_of(a), p.block_of(b));
    roles[r].assign(edges.begin(), edges.end());
  }

  Quotient q{Interpretation(sig, std::move(names), std::move(concepts), std::move(roles)), IndividualMap{}};
  std::vector<std::size_t> proj(i.size());
  for (std::size_t a = 0; a < i.size(); ++a) proj[a] = p.block_of(a);
  q.projection = IndividualMap(std::move(proj));

  auto check = check_morphism(q.projection, i, q.model);
  if (!check) throw NotABisimulationPartition(check.witness->describe(i, q.model));
  return q;
}

BehaviorSignature behavior_signature(const Interpretation &i, std::size_t a, std::size_t k) {
  if (a >= i.size()) throw InvalidModel("individual outside the carrier");
  BehaviorSignature sig{a, k, {}};
  const std::size_t roles = i.signature().role_names().size();

  auto colors_of = [&](const Subset &frontier) {
    std::set<Subset> out;
    for (auto x = frontier.find_first(); x != Subset::npos; x = frontier.find_next(x)) out.insert(i.color(x));
    return out;
  };

  // breadth-first over words; each word carries the set of individuals it reaches
  std::vector<std::pair<std::vector<std::size_t>, Subset>> layer;
  Subset start(i.size());
  start.set(a);
  layer.emplace_back(std::vector<std::size_t>{}, start);
  sig.words.emplace(std::vector<std::size_t>{}, colors_of(start));
  for (std::size_t len = 0; len < k; ++len) {
    std::vector<std::pair<std::vector<std::size_t>, Subset>> next_layer;
    for (const auto &[word, frontier] : layer) {
      for (std::size_t r = 0; r < roles; ++r) {
        Subset reached(i.size());
        for (auto x = frontier.find_first(); x != Subset::npos; x = frontier.find_next(x)) reached |= i.successors(r, x);
        if (reached.none()) continue;
        auto w = word;
        w.push_back(r);
        sig.words.emplace(w, colors_of(reached));
        next_layer.emplace_back(std::move(w), std::move(reached));
      }
    }
    layer = std::move(next_layer);
  }
  return sig;
}

std::size_t PreservationReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto &e) { return e.violation; }));
}

PreservationReport preservation_report(const Interpretation &src, const Interpretation &dst, const IndividualMap &m,
                                       const Theory &gcis) {
  PreservationReport report;
  report.morphism = check_morphism(m, src, dst);
  if (!report.morphism) throw NotMorphism(report.morphism.witness->describe(src, dst));
  for (const auto &g : gcis) {
    PreservationEntry e{g, satisfies_any(src, g), satisfies_any(dst, g), false};
    e.violation = (e.target_satisfies && !e.source_satisfies) ||
                  (report.morphism.epi && e.source_satisfies && !e.target_satisfies);
    report.entries.push_back(std::move(e));
  }
  return report;
}

} // namespace alc
