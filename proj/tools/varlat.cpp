// varlat: command-line front end. One JSON document goes to stdout per
// invocation; --verbose adds a human rendering on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "varlat/error.hpp"
#include "varlat/latcheck.hpp"
#include "varlat/models.hpp"
#include "varlat/text.hpp"

using json = nlohmann::ordered_json;
using namespace varlat;

namespace {

  enum Exit { ok = 0, negative = 1, input_error = 2, cap_exceeded = 3 };

  struct Outcome {
    json        report;
    std::string human;
    bool        negative = false;
  };

  std::string read_file(std::string const& path) {
    if (path == "-") {
      std::ostringstream s;
      s << std::cin.rdbuf();
      return s.str();
    }
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) {
      throw Error("cannot write " + path);
    }
  }

  json caps_json(Caps const& c) {
    return {{"max_letters", c.max_letters},
            {"max_p", c.max_p},
            {"max_carrier", c.max_carrier},
            {"lattice_cap", c.lattice_cap}};
  }

  json degree_json(Degree const& d) {
    switch (d.kind) {
      case Degree::Kind::exact: return {{"kind", "exact"}, {"n", d.n}};
      case Degree::Kind::above_bound: return {{"kind", "above-bound"}, {"bound", d.n}};
      case Degree::Kind::infinite: return {{"kind", "infinite"}};
    }
    return {};
  }

  json class_json(ClassReport const& r) {
    return {{"upper_modular", r.upper_modular},
            {"codistributive", r.codistributive},
            {"costandard", r.costandard},
            {"neutral", r.neutral},
            {"modular", to_string(r.modular)},
            {"matched_clause", to_string(r.matched_clause)}};
  }

  std::string mark(bool b) {
    return b ? "yes" : "no";
  }

  json witness_json(std::optional<Witness> const& w) {
    return w ? json::array({w->first, w->second}) : json(nullptr);
  }

  // Properties of every element inside l; the theorem report sits alongside
  // in sublattice output.
  json element_properties(FiniteLattice const&            l,
                          FiniteLattice::Elem             x,
                          std::vector<ElementKind> const& kinds,
                          bool&                           all_hold) {
    json out = json::object();
    for (auto k : kinds) {
      auto const w = find_witness(l, x, k);
      all_hold     = all_hold && !w;
      out[to_string(k)] = {{"holds", !w}, {"witness", witness_json(w)}};
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////

  Outcome cmd_classify(std::string const& text,
                       std::string const& expect,
                       Caps const&        caps) {
    VarietyDesc const v = parse_variety(text, caps);
    ClassReport const r = classify(v, caps);
    Outcome           o;
    o.report = {{"variety", to_string(v)}, {"canonical", v.canonical()}};
    o.report.update(class_json(r));
    std::ostringstream h;
    h << to_string(v) << "\n  upper-modular   " << mark(r.upper_modular)
      << "\n  codistributive  " << mark(r.codistributive) << "\n  costandard      "
      << mark(r.costandard) << "\n  neutral         " << mark(r.neutral)
      << "\n  modular         " << to_string(r.modular) << "\n  clause          "
      << to_string(r.matched_clause) << '\n';
    o.human = h.str();
    if (!expect.empty()) {
      std::string key = expect;
      std::replace(key.begin(), key.end(), '-', '_');
      if (!o.report.contains(key) || !o.report[key].is_boolean()) {
        throw Error("--expect takes upper-modular, codistributive, costandard or neutral");
      }
      o.negative = !o.report[key].get<bool>();
    }
    return o;
  }

  Outcome cmd_entails(std::string const& basis, std::string const& identity, Caps const& caps) {
    NilBasis const b  = parse_basis(basis);
    Identity const id = parse_identity(identity);
    bool const     holds = entails(b, id, caps);
    json           split = json::array();
    for (auto const& z : split_zero(id)) {
      split.push_back(to_string(z));
    }
    Outcome o;
    o.report   = {{"basis", to_string(b)},
                  {"identity", to_string(id)},
                  {"entails", holds},
                  {"split_zero", split}};
    o.human    = to_string(b) + (holds ? " |= " : " does not entail ") + to_string(id) + '\n';
    o.negative = !holds;
    return o;
  }

  Outcome cmd_degree(std::string const& variety,
                     std::string const& basis,
                     unsigned           bound,
                     Caps const&        caps) {
    if (variety.empty() == basis.empty()) {
      throw Error("give either a variety or --basis");
    }
    Degree      d;
    std::string name;
    if (!basis.empty()) {
      NilBasis const b = parse_basis(basis);
      d                = degree(b, bound, caps);
      name             = to_string(b);
    } else {
      VarietyDesc const v = parse_variety(variety, caps);
      d                   = degree_of(v, bound, caps);
      name                = to_string(v);
    }
    Outcome o;
    o.report = {{"input", name}, {"bound", bound}, {"degree", degree_json(d)}};
    o.human  = "degree of " + name + ": " + to_string(d) + '\n';
    return o;
  }

  Outcome cmd_invariants(std::string const& text, Caps const& caps) {
    VarietyDesc const v = parse_variety(text, caps);
    Outcome           o;
    o.report = {{"variety", to_string(v)}, {"canonical", v.canonical()}};
    if (v.is_com()) {
      o.report["periodic"] = false;
      o.report["degree"]   = degree_json(Degree::infinite());
      o.human              = "COM is not periodic\n";
      return o;
    }
    Degree const d       = degree_of(v, caps.max_letters, caps);
    o.report["periodic"] = true;
    o.report["gr"]       = gr(v);
    o.report["m"]        = m_index(v);
    o.report["nil"]      = to_string(v.parts().nil);
    o.report["degree"]   = degree_json(d);
    std::ostringstream h;
    h << to_string(v) << "\n  exp Gr  " << gr(v) << "\n  m       " << m_index(v)
      << "\n  Nil     " << to_string(v.parts().nil) << "\n  degree  " << to_string(d)
      << '\n';
    o.human = h.str();
    return o;
  }

  Outcome cmd_binary(std::string const& which,
                     std::string const& a_text,
                     std::string const& b_text,
                     Caps const&        caps) {
    VarietyDesc const a = parse_variety(a_text, caps);
    VarietyDesc const b = parse_variety(b_text, caps);
    Outcome           o;
    o.report = {{"left", to_string(a)}, {"right", to_string(b)}};
    if (which == "equal") {
      bool const eq        = equal(a, b, caps);
      o.report["equal"]    = eq;
      o.report["left_leq"] = leq(a, b, caps);
      o.report["right_leq"] = leq(b, a, caps);
      o.human    = to_string(a) + (eq ? " = " : " != ") + to_string(b) + '\n';
      o.negative = !eq;
      return o;
    }
    VarietyDesc const r = which == "join" ? join(a, b, caps) : meet(a, b, caps);
    o.report["result"]  = to_string(r);
    o.report["canonical"] = r.canonical();
    o.human = to_string(a) + (which == "join" ? " v " : " ^ ") + to_string(b) + " = "
              + to_string(r) + '\n';
    return o;
  }

  Outcome cmd_catalog(unsigned max_index, std::string const& dot, Caps const& caps) {
    auto const                elems = catalog_elements(max_index);
    std::size_t const         n     = elems.size();
    std::vector<std::uint8_t> order(n * n);
    std::vector<std::string>  labels;
    json                      list = json::array();
    std::ostringstream        h;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(to_string(elems[a]));
      for (std::size_t b = 0; b < n; ++b) {
        order[a * n + b] = catalog_leq(elems[a], elems[b]);
      }
      list.push_back({{"name", labels.back()}, {"basis", to_string(catalog_basis(elems[a]))}});
      h << labels.back() << "  " << to_string(catalog_basis(elems[a])) << '\n';
    }
    if (n > caps.lattice_cap) {
      throw CapExceeded("catalog fragment exceeds the lattice cap");
    }
    FiniteLattice const l = FiniteLattice::build(n, std::move(order), std::move(labels));
    if (!dot.empty()) {
      write_file(dot, to_dot(l, "catalog"));
    }
    Outcome o;
    o.report = {{"max_index", max_index},
                {"elements", list},
                {"distributive", is_distributive(l)}};
    o.human  = h.str();
    return o;
  }

  Outcome cmd_sublattice(std::vector<std::string> const& seed_texts,
                         std::string const&              dot,
                         std::string const&              order_out,
                         Caps const&                     caps) {
    std::vector<VarietyDesc> seeds;
    for (auto const& s : seed_texts) {
      seeds.push_back(parse_variety(s, caps));
    }
    GeneratedLattice const g = generate_sublattice(seeds, caps.lattice_cap, caps);
    FiniteLattice const&   l = g.lattice;
    if (!dot.empty()) {
      write_file(dot, to_dot(l, "sublattice"));
    }
    if (!order_out.empty()) {
      write_file(order_out, write_order(l));
    }
    json               elems = json::array();
    std::ostringstream h;
    h << "generated " << l.size() << " elements\n";
    for (FiniteLattice::Elem x = 0; x < l.size(); ++x) {
      bool              unused = true;
      ClassReport const r      = classify(g.elements[x], caps);
      elems.push_back({{"index", x},
                       {"variety", l.label(x)},
                       {"theorem", class_json(r)},
                       {"in_lattice", element_properties(l, x, all_element_kinds(), unused)}});
      h << "  [" << x << "] " << l.label(x) << "  upper-modular by theorem: "
        << mark(r.upper_modular) << '\n';
    }
    json order = json::array();
    for (FiniteLattice::Elem a = 0; a < l.size(); ++a) {
      json row = json::array();
      for (FiniteLattice::Elem b = 0; b < l.size(); ++b) {
        row.push_back(l.leq(a, b) ? 1 : 0);
      }
      order.push_back(row);
    }
    Outcome o;
    o.report = {{"seeds", seed_texts},
                {"size", l.size()},
                {"distributive", is_distributive(l)},
                {"elements", elems},
                {"order", order}};
    o.human  = h.str();
    return o;
  }

  Outcome cmd_lattice_check(std::string const&              path,
                            std::optional<unsigned> const&  element,
                            std::vector<std::string> const& kind_names,
                            std::string const&              dot,
                            Caps const&                     caps) {
    std::istringstream  in(read_file(path));
    FiniteLattice const l = read_order(in);
    if (l.size() > caps.lattice_cap) {
      throw CapExceeded("lattice exceeds the lattice cap");
    }
    std::vector<ElementKind> kinds;
    for (auto const& k : kind_names) {
      auto const parsed = parse_element_kind(k);
      if (!parsed) {
        throw Error("unknown element kind " + k);
      }
      kinds.push_back(*parsed);
    }
    if (kinds.empty()) {
      kinds = all_element_kinds();
    }
    if (element && *element >= l.size()) {
      throw Error("element index out of range");
    }
    if (!dot.empty()) {
      write_file(dot, to_dot(l));
    }
    bool               all_hold = true;
    json               elems    = json::array();
    std::ostringstream h;
    for (FiniteLattice::Elem x = 0; x < l.size(); ++x) {
      if (element && x != *element) {
        continue;
      }
      json const props = element_properties(l, x, kinds, all_hold);
      elems.push_back({{"index", x}, {"properties", props}});
      h << "element " << x << ':';
      for (auto k : kinds) {
        h << ' ' << to_string(k) << '=' << mark(props[to_string(k)]["holds"].get<bool>());
      }
      h << '\n';
    }
    Outcome o;
    o.report   = {{"size", l.size()},
                  {"distributive", is_distributive(l)},
                  {"all_hold", all_hold},
                  {"elements", elems}};
    o.human    = h.str();
    o.negative = !all_hold;
    return o;
  }

  Outcome cmd_table_check(std::string const&              path,
                          std::string const&              basis,
                          unsigned                        letters,
                          std::vector<std::string> const& identities,
                          std::string const&              table_out,
                          Caps const&                     caps) {
    if (path.empty() == basis.empty()) {
      throw Error("give either --table or --basis");
    }
    std::optional<CayleyTable> t;
    if (!basis.empty()) {
      auto const q = free_quotient(parse_basis(basis), letters, caps);
      t            = quotient_to_table(q, caps);
    } else {
      std::istringstream in(read_file(path));
      t = read_table(in);
      if (t->size() > caps.max_table) {
        throw CapExceeded("table exceeds the table cap");
      }
    }
    if (!table_out.empty()) {
      write_file(table_out, write_table(*t));
    }
    bool const associative = check_associative(*t);
    bool       all_hold    = associative;
    json       results     = json::array();
    std::ostringstream h;
    h << "order " << t->size() << (associative ? ", associative\n" : ", not associative\n");
    for (auto const& text : identities) {
      Identity const id = parse_identity(text);
      auto const     cx = find_counterexample(*t, id);
      all_hold          = all_hold && !cx;
      results.push_back({{"identity", to_string(id)},
                         {"holds", !cx},
                         {"counterexample", cx ? json(*cx) : json(nullptr)}});
      h << "  " << to_string(id) << ": " << (cx ? "fails" : "holds") << '\n';
    }
    Outcome o;
    o.report = {{"order", t->size()},
                {"associative", associative},
                {"zero", t->zero() ? json(*t->zero()) : json(nullptr)},
                {"identities", results}};
    o.human    = h.str();
    o.negative = !all_hold;
    return o;
  }

  std::string error_kind(std::exception const& e) {
    if (dynamic_cast<SyntaxError const*>(&e)) return "syntax";
    if (dynamic_cast<InvalidIndex const*>(&e)) return "invalid-index";
    if (dynamic_cast<NonCanonical const*>(&e)) return "non-canonical";
    if (dynamic_cast<NotPeriodic const*>(&e)) return "not-periodic";
    if (dynamic_cast<Unsupported const*>(&e)) return "unsupported";
    if (dynamic_cast<NotALattice const*>(&e)) return "not-a-lattice";
    if (dynamic_cast<NoZeroElement const*>(&e)) return "no-zero-element";
    if (dynamic_cast<NotAssociative const*>(&e)) return "not-associative";
    if (dynamic_cast<CapExceeded const*>(&e)) return "cap-exceeded";
    return "input";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative semigroup varieties: entailment, invariants, lattice checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps;
  bool verbose = false;
  app.add_option("--max-letters", caps.max_letters, "Largest letter count for free objects");
  app.add_option("--max-p", caps.max_p, "Largest nil exponent");
  app.add_option("--max-carrier", caps.max_carrier, "Largest free carrier p^k");
  app.add_option("--lattice-cap", caps.lattice_cap, "Largest generated lattice");
  app.add_flag("-v,--verbose", verbose, "Human-readable report on stderr");

  std::string a, b, basis, dot, out_file, file, expect_kind;
  bool        expect = false;
  unsigned    bound = 0, max_index = 7, letters = 3;
  std::optional<unsigned>  element;
  std::vector<std::string> many, kinds;

  auto* classify_cmd = app.add_subcommand("classify", "Theorem-based classification");
  classify_cmd->add_option("variety", a)->required();
  classify_cmd->add_option("--expect", expect_kind, "Exit 1 unless this property holds");

  auto* entails_cmd = app.add_subcommand("entails", "Does a nil basis entail an identity");
  entails_cmd->add_option("--basis", basis)->required();
  entails_cmd->add_option("identity", a)->required();
  entails_cmd->add_flag("--expect", expect, "Exit 1 on a negative answer");

  auto* degree_cmd = app.add_subcommand("degree", "Nilpotency degree");
  degree_cmd->add_option("variety", a);
  degree_cmd->add_option("--basis", basis);
  degree_cmd->add_option("--bound", bound, "Search bound (default --max-letters)");

  auto* inv_cmd = app.add_subcommand("invariants", "exp Gr, m, Nil and degree");
  inv_cmd->add_option("variety", a)->required();

  auto* join_cmd = app.add_subcommand("join", "Join of two canonical descriptors");
  auto* meet_cmd = app.add_subcommand("meet", "Meet of two canonical descriptors");
  auto* equal_cmd = app.add_subcommand("equal", "Equality of two canonical descriptors");
  for (auto* c : {join_cmd, meet_cmd, equal_cmd}) {
    c->add_option("left", a)->required();
    c->add_option("right", b)->required();
  }
  equal_cmd->add_flag("--expect", expect, "Exit 1 when not equal");

  auto* catalog_cmd = app.add_subcommand("catalog", "Truncation of the catalog lattice");
  catalog_cmd->add_option("--max-index", max_index, "Largest finite index listed");
  catalog_cmd->add_option("--emit-dot", dot, "Write the Hasse diagram");

  auto* sub_cmd = app.add_subcommand("sublattice", "Sublattice generated by descriptors");
  sub_cmd->add_option("--seed", many)->required();
  sub_cmd->add_option("--emit-dot", dot, "Write the Hasse diagram");
  sub_cmd->add_option("--emit-order", out_file, "Write the order matrix");

  auto* lat_cmd = app.add_subcommand("lattice-check", "Special elements of a finite lattice");
  lat_cmd->add_option("--order", file, "Order matrix file, - for stdin")->required();
  lat_cmd->add_option("--element", element);
  lat_cmd->add_option("--kind", kinds, "Element kind, repeatable");
  lat_cmd->add_option("--emit-dot", dot, "Write the Hasse diagram");
  lat_cmd->add_flag("--expect", expect, "Exit 1 when some property fails");

  auto* table_cmd = app.add_subcommand("table-check", "Identities in a Cayley table");
  table_cmd->add_option("--table", file, "Table file, - for stdin");
  table_cmd->add_option("--basis", basis, "Use the free object of this nil basis");
  table_cmd->add_option("--letters", letters, "Generators of the free object");
  table_cmd->add_option("identity", many);
  table_cmd->add_option("--emit-table", out_file, "Write the table");
  table_cmd->add_flag("--expect", expect, "Exit 1 when some identity fails");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  json doc;
  auto* const cmd = app.get_subcommands().front();
  doc["command"]  = cmd->get_name();
  doc["caps"]     = caps_json(caps);
  try {
    Outcome o;
    if (cmd == classify_cmd) {
      o = cmd_classify(a, expect_kind, caps);
      expect = !expect_kind.empty();
    } else if (cmd == entails_cmd) {
      o = cmd_entails(basis, a, caps);
    } else if (cmd == degree_cmd) {
      o = cmd_degree(a, basis, bound == 0 ? caps.max_letters : bound, caps);
    } else if (cmd == inv_cmd) {
      o = cmd_invariants(a, caps);
    } else if (cmd == join_cmd || cmd == meet_cmd || cmd == equal_cmd) {
      o = cmd_binary(cmd->get_name(), a, b, caps);
    } else if (cmd == catalog_cmd) {
      o = cmd_catalog(max_index, dot, caps);
    } else if (cmd == sub_cmd) {
      o = cmd_sublattice(many, dot, out_file, caps);
    } else if (cmd == lat_cmd) {
      o = cmd_lattice_check(file, element, kinds, dot, caps);
    } else {
      o = cmd_table_check(file, basis, letters, many, out_file, caps);
    }
    doc["result"] = std::move(o.report);
    std::cout << doc.dump(2) << '\n';
    if (verbose) {
      std::cerr << o.human;
    }
    return expect && o.negative ? negative : ok;
  } catch (std::exception const& e) {
    bool const cap = dynamic_cast<CapExceeded const*>(&e) != nullptr;
    doc["error"]   = {{"kind", error_kind(e)}, {"message", e.what()}};
    std::cout << doc.dump(2) << '\n';
    std::cerr << "varlat: " << e.what() << '\n';
    return cap ? cap_exceeded : input_error;
  }
}
