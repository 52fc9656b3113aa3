// alcbasis: command-line front end for model checking, basis extraction and
// reasoning over .alcm model files and theory files.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alc/basis.hpp"
#include "alc/models.hpp"
#include "alc/reasoner.hpp"
#include "alc/semantics.hpp"
#include "alc/syntax.hpp"

using namespace alc;

namespace {

enum Exit { Ok = 0, False = 1, InputError = 2, BudgetExceeded = 3 };

// Input problem already formatted as "where: what".
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_line_prefix(const std::string &msg) {
  if (msg.rfind("line ", 0) != 0) return msg;
  auto colon = msg.find(": ");
  return colon == std::string::npos ? msg : msg.substr(colon + 2);
}

// Runs `f`, turning located errors into "where:line:col: message".
template <class F> auto located(const std::string &where, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError &e) {
    std::string loc = where;
    if (e.line() != 0) loc += ":" + std::to_string(e.line());
    throw CliError(loc + ":" + std::to_string(e.position() + 1) + ": " + e.what());
  } catch (const InvalidModel &e) {
    std::string loc = where;
    if (e.line() != 0) loc += ":" + std::to_string(e.line());
    throw CliError(loc + ": " + strip_line_prefix(e.what()));
  } catch (const Error &e) {
    throw CliError(where + ": " + e.what());
  }
}

Interpretation load_model(const std::string &path) {
  auto text = read_file(path);
  return located(path, [&] { return parse_model(text); });
}

struct LoadedTheory {
  Signature sig;
  Theory theory;
};

// Theory files carry no signature; it is inferred from the theory together
// with the extra query text.
LoadedTheory load_theory(const std::string &path, const std::string &extra) {
  auto text = read_file(path);
  auto sig = located(path, [&] { return infer_signature(text); });
  if (!extra.empty()) {
    auto more = located("<argument>", [&] { return infer_signature(extra); });
    sig = located("<argument>", [&] { return merge_signatures(sig, more); });
  }
  auto theory = located(path, [&] { return parse_theory(text, sig); });
  return {std::move(sig), std::move(theory)};
}

void write_output(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError(path + ": cannot write file");
  out << text;
}

int print_basis(const BasisReport &report, bool json) {
  const Theory &shown = report.minimized ? *report.minimized : report.raw;
  if (json) {
    nlohmann::ordered_json j;
    j["classes"] = report.stats.classes;
    j["raw_count"] = report.raw.size();
    j["minimized_count"] = report.minimized ? nlohmann::ordered_json(report.minimized->size()) : nullptr;
    j["mode"] = to_string(report.mode);
    j["axioms"] = nlohmann::ordered_json::array();
    for (const auto &g : shown) j["axioms"].push_back(render(g));
    std::cout << j.dump(2) << "\n";
    return Ok;
  }
  for (const auto &g : shown) std::cout << render(g) << "\n";
  const auto &s = report.stats;
  std::cout << "# mode: " << to_string(report.mode) << "\n"
            << "# classes: " << s.classes << "\n"
            << "# raw: " << report.raw.size() << " (names " << s.name_definitions << ", pairs " << s.boolean_pairs
            << ", complements " << s.complements << ", quantifiers " << s.quantifiers << ", inclusions "
            << s.inclusions << ")\n";
  if (report.minimized) {
    std::cout << "# minimized: " << report.minimized->size() << " (eliminated " << s.eliminated;
    if (s.kept_on_timeout) std::cout << ", kept on timeout " << s.kept_on_timeout;
    std::cout << ")\n";
  }
  return Ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite GCI bases for finite ALC models"};
  app.require_subcommand(1, 1);

  std::string model, model2, theory_path, concept_text, gci_text, map_path, out_path, mode_text;
  std::vector<std::string> models;
  bool use_gfp = false, use_lfp = false, do_minimize = false, json = false;
  std::size_t budget = ReasonerOptions{}.budget;
  std::size_t max_size = CountermodelOptions{}.max_size;

  auto *eval = app.add_subcommand("eval", "Print the extension of a concept");
  eval->add_option("MODEL", model)->required();
  eval->add_option("-c,--concept", concept_text, "Concept description")->required();

  auto *check = app.add_subcommand("check", "Check each axiom of a theory against a model");
  check->add_option("MODEL", model)->required();
  check->add_option("THEORY", theory_path)->required();

  auto *fixpoint = app.add_subcommand("fixpoint", "Fixpoint of a cyclic definition \"c = CONCEPT\"");
  fixpoint->add_option("MODEL", model)->required();
  fixpoint->add_option("DEFINITION", gci_text)->required();
  auto *gfp_flag = fixpoint->add_flag("--gfp", use_gfp, "Greatest fixpoint");
  auto *lfp_flag = fixpoint->add_flag("--lfp", use_lfp, "Least fixpoint");
  gfp_flag->excludes(lfp_flag);

  auto *basis = app.add_subcommand("basis", "Compute a finite basis of the GCIs valid in a model");
  basis->add_option("MODEL", model)->required();
  basis->add_flag("--minimize", do_minimize, "Drop axioms entailed by the others");
  basis->add_option("--mode", mode_text, "Representative family")->check(CLI::IsMember({"closure", "separating"}));
  basis->add_flag("--json", json, "Machine-readable summary");
  basis->add_option("--budget", budget, "Reasoner node-expansion budget per query");

  auto *covariety = app.add_subcommand("covariety-basis", "Basis of the covariety generated by several models");
  covariety->add_option("MODEL", models)->required();
  covariety->add_flag("--minimize", do_minimize, "Drop axioms entailed by the others");
  covariety->add_option("--mode", mode_text, "Representative family")->check(CLI::IsMember({"closure", "separating"}));
  covariety->add_flag("--json", json, "Machine-readable summary");
  covariety->add_option("--budget", budget, "Reasoner node-expansion budget per query");

  auto *morphism = app.add_subcommand("morphism", "Classify an individual map between two models");
  morphism->add_option("SRC", model)->required();
  morphism->add_option("DST", model2)->required();
  morphism->add_option("MAPFILE", map_path)->required();

  auto *coprod = app.add_subcommand("coproduct", "Write the disjoint union of models");
  coprod->add_option("MODEL", models)->required();
  coprod->add_option("-o,--output", out_path)->required();

  auto *bisim = app.add_subcommand("bisim-quotient", "Write the quotient by the coarsest bisimulation");
  bisim->add_option("MODEL", model)->required();
  bisim->add_option("-o,--output", out_path)->required();

  auto *ent = app.add_subcommand("entails", "Decide whether a theory entails a GCI");
  ent->add_option("THEORY", theory_path)->required();
  ent->add_option("GCI", gci_text)->required();
  ent->add_option("--budget", budget, "Node-expansion budget");

  auto *cm = app.add_subcommand("countermodel", "Search small models of a theory violating a GCI");
  cm->add_option("THEORY", theory_path)->required();
  cm->add_option("GCI", gci_text)->required();
  cm->add_option("--max-size", max_size, "Largest carrier tried")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return InputError;
  }

  try {
    if (*eval) {
      auto i = load_model(model);
      auto c = located("<concept>", [&] { return parse_concept(concept_text, i.signature()); });
      std::cout << format_set(i, eval_concept(c, i)) << "\n";
      return Ok;
    }

    if (*check) {
      auto i = load_model(model);
      auto text = read_file(theory_path);
      auto t = located(theory_path, [&] { return parse_theory(text, i.signature()); });
      bool all = true;
      for (const auto &g : t) {
        bool ok = located(theory_path, [&] {
          return g.kind == Gci::Kind::FixDef ? satisfies_fixpoint(i, g) : satisfies(i, g);
        });
        all = all && ok;
        std::cout << (ok ? "satisfied     " : "not satisfied ") << render(g) << "\n";
      }
      return all ? Ok : False;
    }

    if (*fixpoint) {
      if (!use_gfp && !use_lfp) throw CliError("fixpoint: one of --gfp or --lfp is required");
      auto i = load_model(model);
      auto def = located("<definition>", [&] {
        return parse_gci(std::string(use_gfp ? "gfp " : "lfp ") + gci_text, i.signature());
      });
      auto ext = located("<definition>", [&] { return fixpoint_extension(i, def); });
      bool ok = ext == i.concept_extension(def.defined());
      std::cout << format_set(i, ext) << "\n" << (ok ? "satisfied" : "not satisfied") << "\n";
      return ok ? Ok : False;
    }

    if (*basis || *covariety) {
      BasisOptions opts;
      opts.minimize = do_minimize;
      opts.reasoner.budget = budget;
      if (mode_text == "closure") opts.mode = FamilyMode::Closure;
      if (mode_text == "separating") opts.mode = FamilyMode::Separating;
      std::vector<Interpretation> loaded;
      if (*basis) {
        loaded.push_back(load_model(model));
      } else {
        for (const auto &p : models) loaded.push_back(load_model(p));
      }
      const std::string where = *basis ? model : "covariety-basis";
      auto report = located(where, [&] {
        return *basis ? compute_basis(loaded.front(), opts) : covariety_basis(loaded, opts);
      });
      return print_basis(report, json);
    }

    if (*morphism) {
      auto src = load_model(model);
      auto dst = load_model(model2);
      auto text = read_file(map_path);
      auto m = located(map_path, [&] { return parse_individual_map(text, src, dst); });
      auto r = located(map_path, [&] { return check_morphism(m, src, dst); });
      if (r.is_morphism) {
        std::cout << "morphism (" << r.flags() << ")\n";
        return Ok;
      }
      std::cout << "not a morphism: " << r.witness->describe(src, dst) << "\n";
      return False;
    }

    if (*coprod) {
      std::vector<Interpretation> loaded;
      for (const auto &p : models) loaded.push_back(load_model(p));
      auto sum = located("coproduct", [&] { return coproduct(loaded); });
      write_output(out_path, write_model(sum));
      return Ok;
    }

    if (*bisim) {
      auto i = load_model(model);
      auto q = located(model, [&] { return quotient(i, coarsest_bisimulation(i)); });
      write_output(out_path, write_model(q.model));
      std::cout << i.size() << " -> " << q.model.size() << " individuals\n";
      return Ok;
    }

    if (*ent || *cm) {
      auto [sig, t] = load_theory(theory_path, gci_text);
      auto g = located("<gci>", [&] { return parse_gci(gci_text, sig); });
      if (*ent) {
        auto r = located(theory_path, [&] { return entails(t, g, sig, ReasonerOptions{budget, false}); });
        switch (r.verdict) {
        case Verdict::Entailed:
          std::cout << "entailed\n";
          return Ok;
        case Verdict::NotEntailed:
          std::cout << "not entailed\n";
          return False;
        default:
          std::cout << "timeout after " << r.expansions << " expansions\n";
          return BudgetExceeded;
        }
      }
      try {
        auto found = bounded_countermodel(t, g, sig, CountermodelOptions{max_size, CountermodelOptions{}.budget});
        if (!found) {
          std::cout << "no countermodel with at most " << max_size << " individuals\n";
          return Ok;
        }
        std::cout << write_model(*found);
        return False;
      } catch (const SearchBudgetExceeded &e) {
        std::cerr << "alcbasis: " << e.what() << "\n";
        return BudgetExceeded;
      }
    }
  } catch (const CliError &e) {
    std::cerr << "alcbasis: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception &e) {
    std::cerr << "alcbasis: " << e.what() << "\n";
    return InputError;
  }
  return InputError;
}
