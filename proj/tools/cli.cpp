#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "rbalg/families.hpp"
#include "rbalg/search.hpp"
#include "rbalg/spec_file.hpp"

namespace rbalg {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Problems with the command line or the document, not with the algebra.
struct UsageError : Error {
  using Error::Error;
};

class Printer {
 public:
  explicit Printer(std::ostream& out) : out_(out) {}
  void report(const std::string& title, const CheckReport& r) {
    out_ << title << ": " << r.to_string();
    ok_ = ok_ && r.passed;
  }
  void fail() { ok_ = false; }
  int code() const { return ok_ ? kPass : kFail; }

 private:
  std::ostream& out_;
  bool ok_ = true;
};

const RBOperator& rb_at(const AlgebraSpec& s, std::size_t index) {
  if (index >= s.rota_baxter.size()) {
    throw UsageError("document has no rota_baxter entry #" + std::to_string(index));
  }
  return s.rota_baxter[index];
}

const BimoduleBlock& bimodule_of(const AlgebraSpec& s) {
  if (!s.bimodule) throw UsageError("document has no bimodule block");
  return *s.bimodule;
}

GRBOperator grb_of(const AlgebraSpec& s) {
  const BimoduleBlock& b = bimodule_of(s);
  if (!b.grb) throw UsageError("bimodule block has no grb map");
  return {*b.grb};
}

int cmd_check(const std::string& file, const std::string& kind, std::size_t cap, std::ostream& out) {
  AlgebraSpec s = read_spec_file(file);
  Printer p(out);
  if (kind == "assoc") {
    p.report("BiHom-associative", check_bihom_associative(s.as_assoc(), cap));
  } else if (kind == "dend") {
    p.report("BiHom-dendriform", check_dendriform(s.as_dend(), cap));
  } else if (kind == "tridend") {
    p.report("BiHom-tridendriform", check_tridendriform(s.as_tridend(), cap));
  } else if (kind == "quadri") {
    p.report("BiHom-quadri", check_quadri(s.as_quadri(), cap));
  } else if (kind == "rb" || kind == "rb-dend") {
    if (s.rota_baxter.empty()) throw UsageError("document has no rota_baxter block");
    for (std::size_t i = 0; i < s.rota_baxter.size(); ++i) {
      const std::string title = "Rota-Baxter #" + std::to_string(i);
      if (kind == "rb" && s.kind == StructureKind::assoc) {
        p.report(title, check_rota_baxter(s.as_assoc(), s.rota_baxter[i], cap));
      } else {
        p.report(title, check_rb_on_dendriform(s.as_dend(), s.rota_baxter[i], cap));
      }
    }
  } else if (kind == "baxter") {
    if (!s.baxter || (!s.baxter->right && !s.baxter->left)) throw UsageError("document has no baxter block");
    auto a = s.as_assoc();
    if (s.baxter->right) p.report("right Baxter", check_one_sided_baxter(a, {*s.baxter->right, BaxterSide::right}, cap));
    if (s.baxter->left) p.report("left Baxter", check_one_sided_baxter(a, {*s.baxter->left, BaxterSide::left}, cap));
  } else if (kind == "bimodule") {
    p.report("bimodule", check_bimodule(s.as_assoc(), bimodule_of(s).module, cap));
  } else if (kind == "grb") {
    CheckReport r = check_grb(s.as_assoc(), bimodule_of(s).module, grb_of(s), cap);
    p.report("generalized Rota-Baxter", r);
  } else if (kind == "twistor" || kind == "pseudotwistor") {
    if (s.twistors.empty()) throw UsageError("document has no twistors block");
    auto a = s.as_assoc();
    for (std::size_t i = 0; i < s.twistors.size(); ++i) {
      const std::string title = "twistor #" + std::to_string(i);
      if (kind == "twistor") {
        p.report(title, check_weak_pseudotwistor(a, s.weak_twistor(i), cap));
      } else {
        p.report(title, check_pseudotwistor(a, s.twistor_with_companions(i), cap));
      }
    }
  } else {
    throw UsageError("unknown --kind '" + kind + "'");
  }
  return p.code();
}

struct DeriveArgs {
  std::string file;
  std::string via;
  std::string with;
  std::string mode;
  std::string output;
  std::size_t rb_index = 0;
};

AlgebraSpec derive(const DeriveArgs& d) {
  AlgebraSpec s = read_spec_file(d.file);
  const std::string& via = d.via;
  if (via == "rb-tridend") return AlgebraSpec::from(rb_derive(s.as_assoc(), rb_at(s, d.rb_index)));
  if (via == "rb-double") return AlgebraSpec::from(rb_double_product(s.as_assoc(), rb_at(s, d.rb_index)));
  if (via == "yau") {
    if (!s.twist) throw UsageError("document has no twist block");
    const auto& t = *s.twist;
    switch (s.kind) {
      case StructureKind::assoc: return AlgebraSpec::from(yau_twist(s.as_assoc(), t.atilde, t.btilde));
      case StructureKind::dend: return AlgebraSpec::from(yau_twist(s.as_dend(), t.atilde, t.btilde));
      case StructureKind::tridend: return AlgebraSpec::from(yau_twist(s.as_tridend(), t.atilde, t.btilde));
      case StructureKind::quadri: return AlgebraSpec::from(yau_twist(s.as_quadri(), t.atilde, t.btilde));
    }
  }
  if (via == "tensor-quadri") {
    if (d.with.empty()) throw UsageError("--via tensor-quadri needs --with FILE");
    return AlgebraSpec::from(tensor_quadri(s.as_dend(), read_spec_file(d.with).as_dend()));
  }
  if (via == "quadri-h") return AlgebraSpec::from(quadri_projections(s.as_quadri()).first);
  if (via == "quadri-v") return AlgebraSpec::from(quadri_projections(s.as_quadri()).second);
  if (via == "split-null") return AlgebraSpec::from(split_null_extension(s.as_assoc(), bimodule_of(s).module));
  if (via == "grb-dend") return AlgebraSpec::from(grb_to_dendriform(s.as_assoc(), bimodule_of(s).module, grb_of(s)));
  if (via == "rb-twistor") {
    auto a = s.as_assoc();
    WeakPseudotwistor w = rb_pseudotwistor(a, rb_at(s, d.rb_index));
    AlgebraSpec outp = AlgebraSpec::from(a);
    outp.twistors.push_back({w.T.matrix, w.companion.matrix, std::nullopt, std::nullopt, w.atilde, w.btilde});
    return outp;
  }
  if (via == "compose-twistor") {
    if (d.mode != "general" && d.mode != "commuting") {
      throw UsageError("--via compose-twistor needs --mode general|commuting");
    }
    if (s.twistors.size() < 2) throw UsageError("--via compose-twistor needs two twistors in the document");
    auto a = s.as_assoc();
    WeakPseudotwistor w = compose_pseudotwistors(a, s.weak_twistor(0), s.weak_twistor(1),
                                                 d.mode == "general" ? ComposeMode::general : ComposeMode::commuting);
    AlgebraSpec outp = AlgebraSpec::from(a);
    outp.twistors.push_back({w.T.matrix, w.companion.matrix, std::nullopt, std::nullopt, w.atilde, w.btilde});
    return outp;
  }
  if (via == "pair-quadri") return AlgebraSpec::from(commuting_pair_quadri(s.as_assoc(), rb_at(s, 0), rb_at(s, 1)));
  throw UsageError("unknown --via '" + via + "'");
}

int cmd_derive(const DeriveArgs& d, std::ostream& out) {
  AlgebraSpec result = derive(d);
  if (d.output.empty()) {
    out << serialize_spec(result);
  } else {
    write_spec_file(d.output, result);
  }
  return kPass;
}

std::vector<Vector> parse_elements(const std::string& text, const Field& f, std::size_t n) {
  std::vector<Vector> xs;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<Scalar> coords;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) coords.push_back(f.parse(item));
    if (coords.size() != n) {
      throw UsageError("element '" + group + "' needs " + std::to_string(n) + " coordinates");
    }
    xs.emplace_back(f, std::move(coords));
  }
  return xs;
}

int cmd_trees_act(const std::string& tree, const std::string& file, const std::string& elements, std::ostream& out) {
  AugTree t = parse_aug_tree(tree);
  AlgebraSpec s = read_spec_file(file);
  auto a = s.as_assoc();
  auto xs = parse_elements(elements, a.field(), a.dim());
  const RBOperator* r = std::holds_alternative<RBAugTree>(t) ? &rb_at(s, 0) : nullptr;
  out << action_eval(t, xs, a, r).to_string() << "\n";
  return kPass;
}

int cmd_trees_reduce(const std::string& file, const IdealBounds& bounds, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  FreeElement x = parse_free_element(buf.str());
  FreeElement r = truncated_ideal_reduce(x, bounds);
  out << "member: " << (r.is_zero() ? "yes" : "no") << "\n";
  out << serialize_free_element(r);
  return kPass;
}

int print_search(const SearchResult& r, std::ostream& out) {
  out << "field " << r.field.to_string() << ", dim " << r.dim;
  if (r.weight) out << ", weight " << r.weight->to_string();
  out << "\nexamined " << r.examined << ", found " << r.found << ", reverified " << r.reverified << "\n";
  for (std::size_t i = 0; i < r.operators.size(); ++i) out << "#" << i << "\n" << r.operators[i].to_string();
  return r.reverified == r.found ? kPass : kFail;
}

std::map<std::string, mpq_class> parse_sample(const std::string& text) {
  std::map<std::string, mpq_class> sample;
  std::stringstream items(text);
  std::string item;
  Field q = Field::rational();
  while (std::getline(items, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("sample entry '" + item + "' is not name=value");
    sample[item.substr(0, eq)] = q.parse(item.substr(eq + 1)).rational();
  }
  return sample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for BiHom-associative structures and Rota-Baxter operators"};
  app.name("rbalg");
  app.require_subcommand(1);
  std::function<int()> action;
  std::size_t cap = kDefaultViolationCap;

  auto* check = app.add_subcommand("check", "Check the axioms of a structure document");
  std::string check_file, check_kind;
  check->add_option("file", check_file, "Structure document")->required();
  check->add_option("--kind", check_kind, "assoc|dend|tridend|quadri|rb|rb-dend|baxter|bimodule|grb|twistor|pseudotwistor")
      ->required();
  check->add_option("--cap", cap, "Violations listed per report");
  check->callback([&] { action = [&] { return cmd_check(check_file, check_kind, cap, out); }; });

  auto* der = app.add_subcommand("derive", "Build a new structure from a document");
  DeriveArgs dargs;
  der->add_option("file", dargs.file, "Structure document")->required();
  der->add_option("--via", dargs.via,
                  "rb-tridend|rb-double|yau|tensor-quadri|quadri-h|quadri-v|split-null|grb-dend|rb-twistor|"
                  "compose-twistor|pair-quadri")
      ->required();
  der->add_option("--with", dargs.with, "Second document for tensor-quadri");
  der->add_option("--mode", dargs.mode, "general|commuting for compose-twistor");
  der->add_option("--rb-index", dargs.rb_index, "Which rota_baxter entry to use");
  der->add_option("-o,--output", dargs.output, "Write the result here instead of stdout");
  der->callback([&] { action = [&] { return cmd_derive(dargs, out); }; });

  auto* trees = app.add_subcommand("trees", "Planar binary trees and the free algebra");
  trees->require_subcommand(1);
  auto* tenum = trees->add_subcommand("enumerate", "List all trees with n leaves");
  std::size_t leaves = 1;
  tenum->add_option("-n", leaves, "Number of leaves")->required();
  tenum->callback([&] {
    action = [&] {
      auto all = enumerate_trees(leaves);
      for (const auto& t : all) out << t.to_string() << "\n";
      out << "count " << all.size() << "\n";
      return kPass;
    };
  });
  auto* tact = trees->add_subcommand("act", "Evaluate a decorated tree on an algebra");
  std::string tree_text, act_file, elements;
  tact->add_option("tree", tree_text, "Tree, e.g. ((L[1,0;1] L){0} L[0,2])")->required();
  tact->add_option("spec", act_file, "Associative document (with rota_baxter for RB trees)")->required();
  tact->add_option("elements", elements, "Coordinates: comma-separated, elements separated by ';'")->required();
  tact->callback([&] { action = [&] { return cmd_trees_act(tree_text, act_file, elements, out); }; });
  auto* tred = trees->add_subcommand("reduce", "Reduce a free element modulo the truncated ideal");
  std::string red_file;
  IdealBounds bounds{3, 1, 1};
  tred->add_option("file", red_file, "Free element document")->required();
  tred->add_option("--max-leaves", bounds.max_leaves, "Leaf bound");
  tred->add_option("--max-ab", bounds.max_ab_power, "Bound on leaf alpha and beta powers");
  tred->add_option("--max-r", bounds.max_r_power, "Bound on vertex R powers");
  tred->callback([&] { action = [&] { return cmd_trees_reduce(red_file, bounds, out); }; });

  auto* search = app.add_subcommand("search", "Enumerate operators over a prime field");
  search->require_subcommand(1);
  SearchOptions sopts;
  std::uint64_t budget = 0;
  auto add_common = [&](CLI::App* sub, std::string& file) {
    sub->add_option("file", file, "Associative document over F_p")->required();
    sub->add_option("--jobs", sopts.jobs, "Worker threads");
    sub->add_option("--budget", budget, "Maximum number of candidates");
  };
  auto* srb = search->add_subcommand("rb", "All Rota-Baxter operators of a weight");
  std::string srb_file, weight = "0";
  add_common(srb, srb_file);
  srb->add_option("--weight", weight, "Weight");
  srb->callback([&] {
    action = [&] {
      if (budget) sopts.budget = budget;
      auto a = read_spec_file(srb_file).as_assoc();
      return print_search(enumerate_rb(a, a.field().parse(weight), sopts), out);
    };
  });
  auto* sbax = search->add_subcommand("baxter", "All one-sided Baxter operators");
  std::string sbax_file, side = "right";
  add_common(sbax, sbax_file);
  sbax->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
  sbax->callback([&] {
    action = [&] {
      if (budget) sopts.budget = budget;
      auto a = read_spec_file(sbax_file).as_assoc();
      return print_search(enumerate_baxter(a, side == "left" ? BaxterSide::left : BaxterSide::right, sopts), out);
    };
  });

  auto* vf = app.add_subcommand("verify-family", "Check a built-in Rota-Baxter family on the two-parameter algebra");
  std::string family, mode = "symbolic";
  std::vector<std::string> samples;
  vf->add_option("id", family, "w0f1|w0f2|w1f1|w1f2|w1f3|w1f4")->required();
  vf->add_option("--mode", mode, "symbolic|sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
  vf->add_option("--sample", samples, "Assignment such as a=2,b=3,r=5 (repeatable)");
  vf->callback([&] {
    action = [&] {
      std::vector<std::map<std::string, mpq_class>> parsed;
      for (const auto& s : samples) parsed.push_back(parse_sample(s));
      if (mode == "sampled" && parsed.empty()) throw UsageError("--mode sampled needs at least one --sample");
      Printer p(out);
      p.report(family + " (" + find_family(family).formula + ")",
               verify_parametric_family(family, mode == "symbolic" ? FamilyMode::symbolic : FamilyMode::sampled,
                                        parsed));
      return p.code();
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const InputAxiomsFail& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const TwistHypothesisViolated& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rbalg
