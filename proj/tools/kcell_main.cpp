#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "kcell/based_ring.hpp"
#include "kcell/errors.hpp"
#include "kcell/parabolic.hpp"

using namespace kcell;
using ojson = nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string type;
  std::string datum_file;
  std::string lattice = "weight";
  std::string format = "text";
  std::string cache_dir;
  std::string exec = "auto";
  long long max_cutoff = 4;
  bool allow_large_rank = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool csv_allowed) {
  cmd->add_option("--type", o.type, "named type, e.g. A2, B2, G2");
  cmd->add_option("--datum", o.datum_file, "datum description file (key = value lines)");
  cmd->add_option("--lattice", o.lattice,
                  "character lattice for --type: weight or root (default weight)");
  cmd->add_option("--format", o.format,
                  csv_allowed ? "output format: text, json or csv"
                              : "output format: text or json");
  cmd->add_option("--cache-dir", o.cache_dir, "directory for cached basis data");
  cmd->add_option("--max-cutoff", o.max_cutoff,
                  "refuse cutoffs above this bound (default 4)");
  cmd->add_flag("--allow-large-rank", o.allow_large_rank,
                "permit rank above 4 (computations grow quickly)");
  cmd->add_option("--exec", o.exec, "execution policy: serial, parallel or auto");
}

Exec exec_of(const CommonOpts& o) {
  if (o.exec == "serial") return Exec::Serial;
  if (o.exec == "parallel") return Exec::Parallel;
  if (o.exec == "auto") return Exec::Auto;
  throw UsageError("--exec must be serial, parallel or auto");
}

void check_format(const CommonOpts& o, bool csv_allowed) {
  if (o.format == "text" || o.format == "json") return;
  if (o.format == "csv" && csv_allowed) return;
  throw UsageError("unsupported --format '" + o.format + "' for this command");
}

void check_cutoff(const CommonOpts& o, long long cutoff) {
  if (cutoff < 0) throw UsageError("cutoff must be nonnegative");
  if (cutoff > o.max_cutoff)
    throw UsageError("cutoff " + std::to_string(cutoff) + " exceeds --max-cutoff " +
                     std::to_string(o.max_cutoff));
}

RootDatum load_datum(const CommonOpts& o) {
  RootDatum d = [&] {
    if (!o.datum_file.empty()) {
      std::ifstream in(o.datum_file);
      if (!in) throw UsageError("cannot open datum file '" + o.datum_file + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      return RootDatum::from_text(ss.str());
    }
    if (o.type.empty()) throw UsageError("give --type or --datum");
    if (o.lattice != "weight" && o.lattice != "root")
      throw UsageError("--lattice must be weight or root");
    return RootDatum::from_text("type = " + o.type + "\nsublattice = " + o.lattice + "\n");
  }();
  if (d.rank() > 4 && !o.allow_large_rank)
    throw UsageError("rank " + std::to_string(d.rank()) +
                     " above 4; pass --allow-large-rank to proceed");
  return d;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

ojson weight_json(const Weight& w) {
  ojson a = ojson::array();
  for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w[i]);
  return a;
}

ojson mat_json(const IntMat& m) {
  ojson a = ojson::array();
  for (const auto& row : m) {
    ojson r = ojson::array();
    for (auto v : row) r.push_back(v);
    a.push_back(std::move(r));
  }
  return a;
}

Weight parse_weight(const std::string& s, std::size_t rank) {
  Weight w = weight_from_string(s);
  if (w.rank() != rank)
    throw UsageError("weight " + s + " has " + std::to_string(w.rank()) +
                     " coordinates; the datum has rank " + std::to_string(rank));
  return w;
}

CellElement parse_cell(const WeylGroup& g, const std::string& s) {
  auto fail = [&] {
    throw UsageError("cannot parse cell element '" + s + "'; expected (word,[coords],word)");
  };
  std::string t = s;
  auto trim = [](std::string v) {
    std::size_t a = v.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    std::size_t b = v.find_last_not_of(" \t");
    return v.substr(a, b - a + 1);
  };
  t = trim(t);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail();
  t = t.substr(1, t.size() - 2);
  std::size_t lb = t.find('['), rb = t.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb) fail();
  std::string left = trim(t.substr(0, lb));
  std::string mid = t.substr(lb, rb - lb + 1);
  std::string right = trim(t.substr(rb + 1));
  if (left.empty() || left.back() != ',') fail();
  if (right.empty() || right.front() != ',') fail();
  CellElement c;
  c.f = g.element_by_word_name(trim(left.substr(0, left.size() - 1)));
  c.chi = parse_weight(mid, g.datum().rank());
  if (!is_dominant(c.chi)) throw NotDominant("cell element weight must be dominant");
  c.f2 = g.element_by_word_name(trim(right.substr(1)));
  return c;
}

int run_describe(const CommonOpts& o) {
  check_format(o, false);
  RootDatum d = load_datum(o);
  auto mat_text = [](const IntMat& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ',';
      os << '[';
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (j) os << ',';
        os << m[i][j];
      }
      os << ']';
    }
    os << ']';
    return os.str();
  };
  std::vector<Coord> omega = d.omega().canonical_form();
  if (o.format == "json") {
    ojson j;
    j["label"] = d.label();
    j["rank"] = d.rank();
    j["cartan"] = mat_json(d.cartan());
    j["sublattice"] = mat_json(d.sublattice());
    j["positive_roots"] = d.num_positive_roots();
    ojson om = ojson::array();
    for (auto v : omega) om.push_back(v);
    j["omega"] = std::move(om);
    j["omega_order"] = d.omega().order();
    j["digest"] = d.digest();
    j["cartan_digest"] = d.cartan_digest();
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "label = " << d.label() << "\n";
  std::cout << "rank = " << d.rank() << "\n";
  std::cout << "cartan = " << mat_text(d.cartan()) << "\n";
  std::cout << "sublattice = " << mat_text(d.sublattice()) << "\n";
  std::cout << "positive_roots = " << d.num_positive_roots() << "\n";
  std::cout << "omega = [";
  for (std::size_t i = 0; i < omega.size(); ++i) std::cout << (i ? "," : "") << omega[i];
  std::cout << "]\n";
  std::cout << "omega_order = " << d.omega().order() << "\n";
  std::cout << "digest = " << d.digest() << "\n";
  std::cout << "cartan_digest = " << d.cartan_digest() << "\n";
  return 0;
}

int run_weyl_list(const CommonOpts& o) {
  check_format(o, true);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (std::size_t w = 0; w < g.size(); ++w) {
      ojson j;
      j["index"] = w;
      j["name"] = g.word_name(w);
      j["length"] = g.length(w);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "index,name,length\n";
    for (std::size_t w = 0; w < g.size(); ++w)
      std::cout << w << "," << csv_field(g.word_name(w)) << "," << g.length(w) << "\n";
  } else {
    for (std::size_t w = 0; w < g.size(); ++w)
      std::cout << w << "  " << g.word_name(w) << "  length " << g.length(w) << "\n";
  }
  return 0;
}

int run_char_weyl(const CommonOpts& o, const std::string& weight_s) {
  check_format(o, false);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  Weight chi = parse_weight(weight_s, d.rank());
  Laurent ch = weyl_character(g, chi);
  mpz_class dim = weyl_dim(d, chi);
  if (o.format == "json") {
    ojson j;
    j["weight"] = weight_json(chi);
    j["dim"] = dim.get_str();
    j["character"] = ch.to_string();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "weight = " << to_string(chi) << "\n";
    std::cout << "dim = " << dim.get_str() << "\n";
    std::cout << "character = " << ch.to_string() << "\n";
  }
  return 0;
}

int run_char_tensor(const CommonOpts& o, const std::string& w1, const std::string& w2) {
  check_format(o, true);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  CharTable tab(g);
  Weight a = parse_weight(w1, d.rank()), b = parse_weight(w2, d.rank());
  auto dec = tensor_decompose(tab, a, b);
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const auto& [w, m] : dec) {
      ojson j;
      j["weight"] = weight_json(w);
      j["multiplicity"] = m.get_str();
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "weight,multiplicity\n";
    for (const auto& [w, m] : dec)
      std::cout << csv_field(to_string(w)) << "," << m.get_str() << "\n";
  } else {
    for (const auto& [w, m] : dec)
      std::cout << to_string(w) << " " << m.get_str() << "\n";
  }
  return 0;
}

int run_steinberg(const CommonOpts& o, const std::string& what) {
  check_format(o, false);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  const SteinbergData& sd = steinberg_data(g, o.cache_dir);
  if (what == "basis") {
    if (o.format == "json") {
      ojson arr = ojson::array();
      for (std::size_t w = 0; w < g.size(); ++w) {
        ojson j;
        j["name"] = g.word_name(w);
        j["x"] = weight_json(sd.x[w]);
        arr.push_back(std::move(j));
      }
      std::cout << arr.dump() << "\n";
    } else {
      for (std::size_t w = 0; w < g.size(); ++w)
        std::cout << "x_" << g.word_name(w) << " = " << to_string(sd.x[w]) << "\n";
    }
  } else if (what == "gram") {
    if (o.format == "json") {
      ojson arr = ojson::array();
      for (std::size_t i = 0; i < g.size(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < g.size(); ++j) row.push_back(sd.gram[i][j].to_string());
        arr.push_back(std::move(row));
      }
      std::cout << arr.dump() << "\n";
    } else {
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
          if (!sd.gram[i][j].is_zero())
            std::cout << g.word_name(i) << "," << g.word_name(j) << ": "
                      << sd.gram[i][j].to_string() << "\n";
    }
  } else {  // dual
    if (o.format == "json") {
      ojson arr = ojson::array();
      for (std::size_t w = 0; w < g.size(); ++w) {
        ojson j;
        j["name"] = g.word_name(w);
        j["dual"] = sd.dual[w].to_string();
        arr.push_back(std::move(j));
      }
      std::cout << arr.dump() << "\n";
    } else {
      for (std::size_t w = 0; w < g.size(); ++w)
        std::cout << "y_" << g.word_name(w) << " = " << sd.dual[w].to_string() << "\n";
    }
  }
  return 0;
}

int run_kg_basis(const CommonOpts& o, long long cutoff) {
  check_format(o, true);
  check_cutoff(o, cutoff);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  const SteinbergData& sd = steinberg_data(g, o.cache_dir);
  std::vector<CellElement> basis = g_basis(g, sd, cutoff);
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const CellElement& c : basis) {
      ojson j;
      j["f"] = g.word_name(c.f);
      j["chi"] = weight_json(c.chi);
      j["f2"] = g.word_name(c.f2);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "f,chi,f2\n";
    for (const CellElement& c : basis)
      std::cout << csv_field(g.word_name(c.f)) << "," << csv_field(to_string(c.chi))
                << "," << csv_field(g.word_name(c.f2)) << "\n";
  } else {
    for (const CellElement& c : basis) std::cout << to_string(g, c) << "\n";
  }
  return 0;
}

int run_kg_test(const CommonOpts& o, const std::string& class_file) {
  check_format(o, false);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  const SteinbergData& sd = steinberg_data(g, o.cache_dir);
  std::ifstream in(class_file);
  if (!in) throw UsageError("cannot open class file '" + class_file + "'");
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("class file: ") + ex.what());
  }
  if (!j.is_array()) throw ParseError("class file: expected a JSON array of pairs");
  KClass k = zero_class(g);
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw ParseError("class file: each entry must be [polynomial, weight]");
    Laurent a = Laurent::from_string(item[0].get<std::string>(), d.rank());
    Weight x = parse_weight(item[1].get<std::string>(), d.rank());
    KClass part = normalize(g, sd, a, Laurent::monomial(x, 1), exec_of(o));
    for (std::size_t f = 0; f < g.size(); ++f) k.coeffs[f] += part.coeffs[f];
  }
  bool inside = is_in_KG(g, sd, k);
  if (o.format == "json") {
    ojson out;
    out["in_subring"] = inside;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "in_subring = " << (inside ? "true" : "false") << "\n";
  }
  return 0;
}

int run_jring_mult(const CommonOpts& o, const std::string& left, const std::string& right) {
  check_format(o, false);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  CharTable tab(g);
  CellElement a = parse_cell(g, left), b = parse_cell(g, right);
  JRingElement prod = jmultiply(tab, a, b);
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const auto& [c, m] : prod.terms) {
      ojson j;
      j["f"] = g.word_name(c.f);
      j["chi"] = weight_json(c.chi);
      j["f2"] = g.word_name(c.f2);
      j["multiplicity"] = m.get_str();
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else {
    if (prod.is_zero()) std::cout << "0\n";
    for (const auto& [c, m] : prod.terms)
      std::cout << to_string(g, c) << " " << m.get_str() << "\n";
  }
  return 0;
}

int run_verify_sigma(const CommonOpts& o, long long cutoff, unsigned long long samples,
                     unsigned long long seed) {
  check_format(o, false);
  check_cutoff(o, cutoff);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  const SteinbergData& sd = steinberg_data(g, o.cache_dir);
  CharTable tab(g);
  auto t0 = std::chrono::steady_clock::now();
  SigmaReport rep = verify_sigma_hom(g, sd, tab, cutoff, samples, seed, exec_of(o));
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  /* Timing goes to stderr so repeated runs with equal inputs produce
     byte-identical stdout. */
  std::cerr << "verify sigma: " << ms << " ms\n";
  ojson j;
  j["datum"] = rep.datum_digest;
  j["cutoff"] = rep.cutoff;
  j["exhaustive"] = rep.exhaustive;
  j["pairs_checked"] = rep.pairs_checked;
  j["closure_checks"] = rep.closure_checks;
  j["passed"] = rep.passed;
  if (rep.counterexample)
    j["counterexample"] = *rep.counterexample;
  else
    j["counterexample"] = nullptr;
  std::cout << j.dump() << "\n";
  return rep.passed ? 0 : 2;
}

int run_cosets(const CommonOpts& o, const std::string& subset_s,
               const std::string& levi_weight, const std::string& levi_element) {
  check_format(o, true);
  RootDatum d = load_datum(o);
  WeylGroup g(d);
  std::vector<int> I;
  if (!subset_s.empty()) {
    std::istringstream ss(subset_s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        int v = std::stoi(tok);
        I.push_back(v - 1);  // simple reflections are named 1..rank
      } catch (const std::exception&) {
        throw UsageError("bad --subset entry '" + tok + "'");
      }
    }
  }
  std::vector<DoubleCoset> cosets = double_cosets(g, I);
  if (!levi_weight.empty()) {
    std::size_t w = levi_element.empty() ? g.identity()
                                         : g.element_by_word_name(levi_element);
    Laurent ch = levi_character(g, I, w, parse_weight(levi_weight, d.rank()));
    if (o.format == "json") {
      ojson j;
      j["levi_character"] = ch.to_string();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "levi_character = " << ch.to_string() << "\n";
    }
    return 0;
  }
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const DoubleCoset& c : cosets) {
      ojson j;
      j["min_rep"] = g.word_name(c.min_rep);
      j["length"] = g.length(c.min_rep);
      j["size"] = c.elements.size();
      ojson els = ojson::array();
      for (std::size_t u : c.elements) els.push_back(g.word_name(u));
      j["elements"] = std::move(els);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "min_rep,length,size\n";
    for (const DoubleCoset& c : cosets)
      std::cout << csv_field(g.word_name(c.min_rep)) << "," << g.length(c.min_rep) << ","
                << c.elements.size() << "\n";
  } else {
    for (const DoubleCoset& c : cosets) {
      std::cout << "min_rep=" << g.word_name(c.min_rep) << " size=" << c.elements.size()
                << " elements=";
      for (std::size_t i = 0; i < c.elements.size(); ++i)
        std::cout << (i ? "," : "") << g.word_name(c.elements[i]);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact convolution algebra of the flag variety and its based ring"};
  app.require_subcommand(1);

  CommonOpts o;

  CLI::App* datum = app.add_subcommand("datum", "inspect a root datum");
  datum->require_subcommand(1);
  CLI::App* describe = datum->add_subcommand("describe", "print the datum and its invariants");
  add_common(describe, o, false);

  CLI::App* weyl = app.add_subcommand("weyl", "the finite Weyl group");
  weyl->require_subcommand(1);
  CLI::App* weyl_list = weyl->add_subcommand("list", "list elements with canonical words");
  add_common(weyl_list, o, true);

  CLI::App* chr = app.add_subcommand("char", "irreducible characters");
  chr->require_subcommand(1);
  CLI::App* char_weyl = chr->add_subcommand("weyl", "character of a dominant weight");
  std::string weight_s;
  char_weyl->add_option("--weight", weight_s, "dominant weight, e.g. [1,0]")->required();
  add_common(char_weyl, o, false);
  CLI::App* char_tensor = chr->add_subcommand("tensor", "decompose a tensor product");
  std::string weight2_s;
  char_tensor->add_option("--weight", weight_s, "first dominant weight")->required();
  char_tensor->add_option("--weight2", weight2_s, "second dominant weight")->required();
  add_common(char_tensor, o, true);

  CLI::App* stb = app.add_subcommand("steinberg", "the monomial basis of the equivariant ring");
  stb->require_subcommand(1);
  CLI::App* stb_basis = stb->add_subcommand("basis", "the weights x_w");
  add_common(stb_basis, o, false);
  CLI::App* stb_gram = stb->add_subcommand("gram", "pairing matrix of the basis monomials");
  add_common(stb_gram, o, false);
  CLI::App* stb_dual = stb->add_subcommand("dual", "the dual family y_w");
  add_common(stb_dual, o, false);

  CLI::App* kg = app.add_subcommand("kg", "the subring attached to the chosen lattice");
  kg->require_subcommand(1);
  CLI::App* kg_basis = kg->add_subcommand("basis", "cell elements mapping into the subring");
  long long cutoff = 1;
  kg_basis->add_option("--cutoff", cutoff, "max coordinate sum of the weight (default 1)");
  add_common(kg_basis, o, true);
  CLI::App* kg_test = kg->add_subcommand("test", "test membership of a class in the subring");
  std::string class_file;
  kg_test->add_option("--class", class_file, "JSON file: array of [polynomial, weight] pairs")
      ->required();
  add_common(kg_test, o, false);

  CLI::App* jring = app.add_subcommand("jring", "the based ring of the lowest cell");
  jring->require_subcommand(1);
  CLI::App* jring_mult = jring->add_subcommand("mult", "multiply two basis elements");
  std::string left_s, right_s;
  jring_mult->add_option("--left", left_s, "cell element (word,[coords],word)")->required();
  jring_mult->add_option("--right", right_s, "cell element (word,[coords],word)")->required();
  add_common(jring_mult, o, false);

  CLI::App* verify = app.add_subcommand("verify", "checked identities on actual data");
  verify->require_subcommand(1);
  CLI::App* verify_sigma =
      verify->add_subcommand("sigma", "multiplicativity of the based-ring embedding");
  unsigned long long samples = 200, seed = 0;
  verify_sigma->add_option("--cutoff", cutoff, "max coordinate sum of weights (default 1)");
  verify_sigma->add_option("--samples", samples,
                           "sampled pairs when the pair count is too large (default 200)");
  verify_sigma->add_option("--seed", seed, "sampling seed (default 0)");
  add_common(verify_sigma, o, false);

  CLI::App* cosets = app.add_subcommand("cosets", "double cosets of a parabolic subgroup");
  std::string subset_s, levi_weight, levi_element;
  cosets->add_option("--subset", subset_s, "simple reflections, e.g. 1,3 (empty allowed)");
  cosets->add_option("--levi-weight", levi_weight,
                     "also print the twisted Levi character of this weight");
  cosets->add_option("--levi-element", levi_element,
                     "twisting element for --levi-weight (default e)");
  add_common(cosets, o, true);

  try {
    app.parse(argc, argv);
    if (*describe) return run_describe(o);
    if (*weyl_list) return run_weyl_list(o);
    if (*char_weyl) return run_char_weyl(o, weight_s);
    if (*char_tensor) return run_char_tensor(o, weight_s, weight2_s);
    if (*stb_basis) return run_steinberg(o, "basis");
    if (*stb_gram) return run_steinberg(o, "gram");
    if (*stb_dual) return run_steinberg(o, "dual");
    if (*kg_basis) return run_kg_basis(o, cutoff);
    if (*kg_test) return run_kg_test(o, class_file);
    if (*jring_mult) return run_jring_mult(o, left_s, right_s);
    if (*verify_sigma) return run_verify_sigma(o, cutoff, samples, seed);
    if (*cosets) return run_cosets(o, subset_s, levi_weight, levi_element);
    std::cerr << "error: no command selected\n";
    return 1;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
