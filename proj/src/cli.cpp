#include "koszul/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "koszul/cohomology.hpp"
#include "koszul/errors.hpp"
#include "koszul/kappa.hpp"
#include "koszul/morphism.hpp"
#include "koszul/parse.hpp"
#include "koszul/symmetric_group.hpp"
#include "koszul/verify.hpp"

namespace koszul::cli {

namespace {

using json = nlohmann::ordered_json;

const char* const kExampleRho = "[2,5,3,1,4]";

json to_json(const std::vector<Degree>& degrees) {
  json out = json::array();
  for (auto d : degrees) {
    out.push_back(d.value);
  }
  return out;
}

std::string sequence_text(const GradedSequence& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += (i > 0 ? "," : "") + g[i].label;
  }
  return out + ")";
}

std::string parity_summary(const std::vector<Degree>& degrees) {
  std::size_t odd = 0;
  for (auto d : degrees) {
    odd += d.parity();
  }
  return std::to_string(odd) + " odd, " + std::to_string(degrees.size() - odd) + " even";
}

std::string morphism_reason(const std::vector<Degree>& degrees) {
  std::size_t odd = 0;
  for (auto d : degrees) {
    odd += d.parity();
  }
  if (odd == 0) {
    return "all degrees even";
  }
  if (odd == degrees.size()) {
    return "all degrees odd";
  }
  if (odd == 1) {
    return "exactly one odd degree";
  }
  return "mixed parities with at least two odd degrees: some reordering holds the "
         "forbidden triplet (odd, odd, even)";
}

/// g = Q(f) for the optional --base-order.
GradedSequence base_sequence(const Invocation& inv, const std::vector<Degree>& degrees) {
  const GradedSequence f(degrees);
  if (inv.base_order.empty()) {
    return f;
  }
  return act(parse_perm(inv.base_order, degrees.size()), f);
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int run_sign(const Invocation& inv, std::ostream& out) {
  const auto degrees = parse_degrees(inv.degrees);
  const Permutation sigma = parse_perm(inv.perm, degrees.size());
  const GradedSequence g = base_sequence(inv, degrees);
  const Sign s = kappa(sigma, g);
  const unsigned z = kappa_exponent(sigma, g);
  if (inv.json) {
    json doc;
    doc["n"] = degrees.size();
    doc["degrees"] = to_json(degrees);
    doc["perm"] = sigma.one_based();
    doc["base_order"] = inv.base_order.empty() ? Permutation(degrees.size()).one_based()
                                               : parse_perm(inv.base_order, degrees.size()).one_based();
    doc["g"] = g.labels();
    doc["sign"] = s.value();
    doc["exponent_mod2"] = z;
    emit(out, doc);
  } else {
    out << "n: " << degrees.size() << "\n"
        << "degrees: " << format_degrees(degrees) << "\n"
        << "perm: " << format_one_line(sigma) << " = " << format_cycles(sigma) << "\n"
        << "g: " << sequence_text(g) << "  |g| = " << format_degrees(g.degrees()) << "\n"
        << "sign: " << s << "\n"
        << "exponent_mod2: " << z << "\n";
  }
  return kSuccess;
}

int run_sign_word(const Invocation& inv, std::ostream& out) {
  const auto degrees = parse_degrees(inv.degrees);
  const Word w = parse_word(inv.word, degrees.size());
  const GradedSequence g = base_sequence(inv, degrees);
  const Sign s = kappa_word(w, g);
  const Permutation p = project(w);
  if (inv.json) {
    json doc;
    doc["n"] = degrees.size();
    doc["degrees"] = to_json(degrees);
    doc["word"] = format_word(w);
    doc["reduced"] = format_word(reduce(w));
    doc["perm"] = p.one_based();
    doc["g"] = g.labels();
    doc["sign"] = s.value();
    emit(out, doc);
  } else {
    out << "n: " << degrees.size() << "\n"
        << "degrees: " << format_degrees(degrees) << "\n"
        << "word: " << format_word(w) << "\n"
        << "reduced: " << format_word(reduce(w)) << "\n"
        << "perm: " << format_one_line(p) << " = " << format_cycles(p) << "\n"
        << "g: " << sequence_text(g) << "\n"
        << "sign: " << s << "\n";
  }
  return kSuccess;
}

void write_table(const Invocation& inv, std::ostream& out) {
  const auto degrees = parse_degrees(inv.degrees);
  const std::size_t n = degrees.size();
  if (n > kExhaustiveBound) {
    throw ResourceError("table limited to n <= " + std::to_string(kExhaustiveBound) +
                        ", got n = " + std::to_string(n));
  }
  const auto group = SymmetricGroup::get(n);
  const auto order = static_cast<SymmetricGroup::Rank>(group->order());
  if (inv.cochain) {
    const TwoCochain c = build_cf(GradedSequence(degrees));
    if (inv.json) {
      json doc;
      doc["n"] = n;
      doc["degrees"] = to_json(degrees);
      doc["records"] = json::array();
      for (SymmetricGroup::Rank s = 0; s < order; ++s) {
        for (SymmetricGroup::Rank r = 0; r < order; ++r) {
          doc["records"].push_back({s, r, c.at(s, r).value()});
        }
      }
      emit(out, doc);
      return;
    }
    out << "# c_f(sigma, rho) = kappa(sigma, rho(f)), |f| = " << format_degrees(degrees)
        << "; ranks are lexicographic\n# sigma_rank rho_rank sign\n";
    for (SymmetricGroup::Rank s = 0; s < order; ++s) {
      for (SymmetricGroup::Rank r = 0; r < order; ++r) {
        out << s << ' ' << r << ' ' << c.at(s, r).value() << '\n';
      }
    }
    return;
  }
  const GradedSequence g = base_sequence(inv, degrees);
  const auto gd = g.degrees();
  if (inv.json) {
    json doc;
    doc["n"] = n;
    doc["degrees"] = to_json(degrees);
    doc["g"] = g.labels();
    doc["rows"] = json::array();
    for (SymmetricGroup::Rank s = 0; s < order; ++s) {
      const auto& sigma = group->element(s);
      doc["rows"].push_back(
          {{"rank", s}, {"perm", sigma.one_based()}, {"sign", kappa(sigma, gd).value()}});
    }
    emit(out, doc);
    return;
  }
  out << "# kappa(sigma, g), g = " << sequence_text(g) << ", |g| = " << format_degrees(gd)
      << "\n# rank perm sign\n";
  for (SymmetricGroup::Rank s = 0; s < order; ++s) {
    const auto& sigma = group->element(s);
    out << s << ' ' << format_one_line(sigma) << ' ' << kappa(sigma, gd).value() << '\n';
  }
}

int run_table(const Invocation& inv, std::ostream& out) {
  if (inv.output.empty()) {
    write_table(inv, out);
    return kSuccess;
  }
  std::ostringstream buffer;
  write_table(inv, buffer);
  std::ofstream file(inv.output, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + inv.output + " for writing");
  }
  file << buffer.str();
  return kSuccess;
}

int run_check_morphism(const Invocation& inv, std::ostream& out) {
  const auto degrees = parse_degrees(inv.degrees);
  const bool morphism = is_morphism(degrees);
  const bool constant = is_constant_one(degrees);
  const bool exhaustive = degrees.size() <= kExhaustiveBound;
  const bool brute = exhaustive && morphism_bruteforce(degrees);
  if (inv.json) {
    json doc;
    doc["n"] = degrees.size();
    doc["degrees"] = to_json(degrees);
    doc["morphism"] = morphism;
    doc["constant_one"] = constant;
    doc["bruteforce"] = exhaustive ? json(brute) : json(nullptr);
    doc["reason"] = morphism_reason(degrees);
    emit(out, doc);
  } else {
    out << "degrees: " << format_degrees(degrees) << " (" << parity_summary(degrees) << ")\n"
        << "morphism: " << (morphism ? "true" : "false") << " (" << morphism_reason(degrees)
        << ")\n"
        << "constant_one: " << (constant ? "true" : "false") << " (at most one odd degree: "
        << (constant ? "yes" : "no") << ")\n";
    if (exhaustive) {
      out << "bruteforce: " << (brute ? "true" : "false") << " (all pairs of S_"
          << degrees.size() << ")\n";
    } else {
      out << "bruteforce: skipped (n > " << kExhaustiveBound << ")\n";
    }
  }
  return morphism ? kSuccess : kFalse;
}

int run_check_cocycle(const Invocation& inv, std::ostream& out) {
  const auto degrees = parse_degrees(inv.degrees);
  const GradedSequence f(degrees);
  std::optional<ModuleStructure> u;
  if (inv.u == "auto") {
    u = module_from_degrees(degrees);
  } else if (inv.u == "one") {
    u = ModuleStructure::trivial();
  } else {
    u = ModuleStructure::signature();
  }
  const bool criterion = is_morphism(degrees);
  bool cocycle = false;
  std::optional<bool> coboundary;
  if (u) {
    if (degrees.size() > kExhaustiveBound) {
      throw ResourceError("exhaustive cocycle check limited to n <= " +
                          std::to_string(kExhaustiveBound));
    }
    cocycle = is_cocycle(f, *u);
    if (cocycle) {
      const TwoCochain c = build_cf(f);
      coboundary = coboundary1(restrict_to_identity(c), *u) == c;
    }
  }
  if (inv.json) {
    json doc;
    doc["n"] = degrees.size();
    doc["degrees"] = to_json(degrees);
    doc["u"] = u ? json(u->name()) : json(nullptr);
    doc["cocycle"] = cocycle;
    doc["parity_criterion"] = criterion;
    doc["coboundary_of_u"] = coboundary ? json(*coboundary) : json(nullptr);
    emit(out, doc);
  } else {
    out << "degrees: " << format_degrees(degrees) << " (" << parity_summary(degrees) << ")\n";
    if (!u) {
      out << "u: none (no admissible module structure: (-1)^{|f_i||f_i+1|} not constant)\n";
    } else {
      out << "u: " << u->name() << (inv.u == "auto" ? " (from degrees)" : "") << "\n";
    }
    out << "cocycle: " << (cocycle ? "true" : "false") << "\n"
        << "parity_criterion: " << (criterion ? "true" : "false") << " ("
        << morphism_reason(degrees) << ")\n";
    if (coboundary) {
      out << "c_f = delta(c_f(-, e)): " << (*coboundary ? "true" : "false") << "\n";
    }
  }
  return cocycle ? kSuccess : kFalse;
}

int run_example(const Invocation& inv, std::ostream& out) {
  const Permutation rho = parse_perm(inv.perm.empty() ? kExampleRho : inv.perm, 0);
  const std::size_t n = rho.size();
  const GradedSequence f(std::vector<Degree>(n, Degree{0}));
  const GradedSequence g = act(rho, f);
  const Word w = decompose_adjacent(rho);

  std::vector<std::string> terms;
  for (const auto& [a, b] : kappa_monomials(rho)) {
    terms.push_back("z" + std::to_string(a + 1) + "z" + std::to_string(b + 1));
  }
  std::string z_text;
  for (const auto& t : terms) {
    z_text += (z_text.empty() ? "" : " + ") + t;
  }
  if (z_text.empty()) {
    z_text = "0";
  }

  // Walk the word right to left, recording which symbols each letter swaps.
  std::vector<std::string> steps;
  std::vector<std::string> current = f.labels();
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = it->index - 1;
    std::string line = "s" + std::to_string(it->index) + ": swap " + current[i] + ", " +
                       current[i + 1] + " -> z" + current[i].substr(1) + "z" +
                       current[i + 1].substr(1);
    std::swap(current[i], current[i + 1]);
    steps.push_back(std::move(line));
  }

  const Permutation rho_inv = rho.inverse();
  if (inv.json) {
    json doc;
    doc["rho"] = rho.one_based();
    doc["two_row_top"] = rho_inv.one_based();
    doc["g"] = g.labels();
    doc["word"] = format_word(w);
    doc["steps"] = steps;
    doc["terms"] = terms;
    doc["Z"] = z_text;
    emit(out, doc);
    return kSuccess;
  }
  out << "rho = " << format_one_line(rho) << " = " << format_cycles(rho) << "\n"
      << "two-row form (column k maps top to bottom):\n  ";
  for (auto v : rho_inv.one_based()) {
    out << ' ' << v;
  }
  out << "\n  ";
  for (std::size_t i = 1; i <= n; ++i) {
    out << ' ' << i;
  }
  out << "\n"
      << "g = rho(f) = " << sequence_text(g) << "\n"
      << "bubble-sort word: rho = " << format_word(w) << "\n"
      << "letters applied right to left:\n";
  for (const auto& s : steps) {
    out << "  " << s << "\n";
  }
  out << "Z = " << z_text << "\n"
      << "kappa(rho, f) = (-1)^Z with z_i = |f_i|\n";
  return kSuccess;
}

int run_verify(const Invocation& inv, std::ostream& out) {
  const SuiteReport report = run_suite(inv.n, inv.trials, inv.seed);
  out << (inv.json ? report.to_json() + "\n" : report.to_text());
  return report.ok() ? kSuccess : kFalse;
}

} // namespace

Invocation parse_invocation(const std::vector<std::string>& args) {
  Invocation inv;
  CLI::App app{"Koszul sign map: signs, tables, morphism and cocycle checks", "koszul-sign"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const auto add_degrees = [&](CLI::App* sub) {
    sub->add_option("--degrees", inv.degrees, "Degree vector |f|, e.g. 1,2,-3")->required();
  };
  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", inv.json, "Emit one JSON document");
  };

  auto* sign = app.add_subcommand("sign", "kappa(P, Q(f)) and its exponent mod 2");
  add_degrees(sign);
  sign->add_option("--perm", inv.perm, "Permutation: [a1,...,an] or cycles (i j)(k l)")->required();
  sign->add_option("--base-order", inv.base_order, "Q with g = Q(f); default identity");
  add_json(sign);

  auto* sign_word = app.add_subcommand("sign-word", "kappa of a generator word");
  add_degrees(sign_word);
  sign_word->add_option("--word", inv.word, "Word, e.g. \"s1 s2^-1 s1\"")->required();
  sign_word->add_option("--base-order", inv.base_order, "Q with g = Q(f); default identity");
  add_json(sign_word);

  auto* table = app.add_subcommand("table", "kappa(sigma, g) for every sigma in S_n (n <= 6)");
  add_degrees(table);
  table->add_option("--base-order", inv.base_order, "Q with g = Q(f); default identity");
  table->add_flag("--cochain", inv.cochain, "Export c_f as (sigma_rank, rho_rank, sign) records");
  table->add_option("--output", inv.output, "Write to this file instead of stdout");
  add_json(table);

  auto* morphism = app.add_subcommand("check-morphism", "Is kappa(-, f) a group morphism?");
  add_degrees(morphism);
  add_json(morphism);

  auto* cocycle = app.add_subcommand("check-cocycle", "Is c_f a 2-cocycle for the structure u?");
  add_degrees(cocycle);
  cocycle->add_option("--u", inv.u, "Module structure: auto, one or sgn")
      ->check(CLI::IsMember({"auto", "one", "sgn"}));
  add_json(cocycle);

  auto* example = app.add_subcommand("example", "Symbolic exponent Z of kappa(rho, f)");
  example->add_option("--perm", inv.perm, "One-line permutation; default [2,5,3,1,4]");
  add_json(example);

  auto* verify = app.add_subcommand("verify", "Run the property suite for n = 2..N");
  verify->add_option("--n", inv.n, "Largest n (2..6)");
  verify->add_option("--trials", inv.trials, "Random degree vectors / samples per n");
  verify->add_option("--seed", inv.seed, "RNG seed");
  add_json(verify);

  std::vector<const char*> argv{"koszul-sign"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      throw UsageError(out.str(), kSuccess, true);
    }
    throw UsageError(err.str(), kUsage, false);
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {sign, Command::sign},           {sign_word, Command::sign_word},
      {table, Command::table},         {morphism, Command::check_morphism},
      {cocycle, Command::check_cocycle}, {example, Command::example},
      {verify, Command::verify}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) {
      inv.command = command;
    }
  }
  return inv;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    switch (inv.command) {
    case Command::sign:
      return run_sign(inv, out);
    case Command::sign_word:
      return run_sign_word(inv, out);
    case Command::table:
      return run_table(inv, out);
    case Command::check_morphism:
      return run_check_morphism(inv, out);
    case Command::check_cocycle:
      return run_check_cocycle(inv, out);
    case Command::example:
      return run_example(inv, out);
    case Command::verify:
      return run_verify(inv, out);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_invocation(args);
  } catch (const UsageError& e) {
    (e.to_stdout() ? out : err) << e.what();
    return e.status();
  }
  return run(inv, out, err);
}

} // namespace koszul::cli
