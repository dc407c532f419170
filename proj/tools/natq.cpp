// natq: exact quiver analysis of finite-dimensional associative algebras.
//
// Subcommands:
//   construct  build an algebra (path algebra, matrix, triangular, product,
//              skew group algebra, the flagship skew example, random
//              radical-graded instances) and write its JSON
//   analyze    radical chain, blocks, natural and ordinary quivers
//   quiver     export one quiver as DOT or JSON
//   verify     run a verification suite; exit 0 iff it passes
//
// Exit codes: 0 success, 1 suite failure, 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <variant>

#include "natq/json_io.hpp"
#include "natq/suites.hpp"

using namespace natq;

namespace {

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.is_rationals()) return fn(RatField{});
  return fn(FpField(fs.characteristic));
}

FieldSpec field_spec_of_file(const ordered_json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw ParseError("input file misses the \"field\" object");
  return field_spec_from_json(j["field"]);
}

struct GlobalFlags {
  uint64_t seed = 0;
  size_t oracle_limit = 24;
  long long truncate = -1;  // -1: default to the Loewy length
};

Options options_of(const GlobalFlags& g) {
  Options opt;
  opt.seed = g.seed;
  opt.bimodule_oracle_dim = g.oracle_limit;
  return opt;
}

int cmd_analyze(const std::string& input, const GlobalFlags& flags) {
  auto j = load_json_file(input);
  auto fs = field_spec_of_file(j);
  return with_field(fs, [&](auto field) {
    auto a = algebra_from_json(field, j);
    auto rep = a.validate();
    if (!rep.ok()) {
      if (rep.failing_triple) {
        auto t = *rep.failing_triple;
        std::cerr << "error: structure constants fail associativity at triple ("
                  << t[0] << "," << t[1] << "," << t[2] << ")\n";
      } else {
        std::cerr << "error: unit law fails at basis index "
                  << *rep.failing_unit_index << "\n";
      }
      return 2;
    }
    auto an = analyze(a, options_of(flags));
    std::cout << analysis_to_json(an).dump(2) << "\n";
    return 0;
  });
}

int cmd_quiver(const std::string& input, const std::string& kind,
               const std::string& format, const std::string& output,
               const GlobalFlags& flags) {
  auto j = load_json_file(input);
  auto fs = field_spec_of_file(j);
  return with_field(fs, [&](auto field) {
    auto a = algebra_from_json(field, j);
    auto an = analyze(a, options_of(flags));
    const Quiver& q = kind == "ordinary" ? an.ordinary : an.natural;
    auto text = export_quiver(q, format);
    if (output.empty())
      std::cout << text;
    else
      write_text_file(output, text);
    return 0;
  });
}

int cmd_verify(const std::string& input, const std::string& suite,
               const GlobalFlags& flags) {
  auto j = load_json_file(input);
  auto fs = field_spec_of_file(j);
  return with_field(fs, [&](auto field) {
    auto a = algebra_from_json(field, j);
    auto rep = a.validate();
    if (!rep.ok()) {
      std::cerr << "error: input algebra fails validation\n";
      return 2;
    }
    auto res = run_suite(suite, a, options_of(flags));
    ordered_json out;
    out["suite"] = suite;
    out["pass"] = res.pass;
    if (!res.pass) out["first_failure"] = res.failure;
    out["details"] = res.details;
    std::cout << out.dump(2) << "\n";
    return res.pass ? 0 : 1;
  });
}

void emit_algebra(const ordered_json& payload, const std::string& output) {
  auto text = payload.dump(2) + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_text_file(output, text);
}

struct ConstructArgs {
  std::string kind;
  std::string output;
  long long characteristic = 0;  // 0 = rationals
  bool rationals = false;
  size_t n = 2;
  std::string spec_file;
  std::string algebra_file;
  std::string action_file;
  std::vector<std::string> inputs;
  std::string profile_file;
  uint64_t seed = 0;
};

int cmd_construct(const ConstructArgs& args) {
  FieldSpec fs{args.rationals ? 0 : args.characteristic};
  if (!fs.is_rationals() && !is_prime(fs.characteristic))
    throw ParseError("--char must be a prime (or pass --rationals)");
  return with_field(fs, [&](auto field) {
    using F = decltype(field);
    if (args.kind == "paper-example") {
      auto pe = paper_example(field);
      emit_algebra(algebra_to_json(pe.skew, fs), args.output);
      return 0;
    }
    if (args.kind == "matrix") {
      emit_algebra(algebra_to_json(matrix_algebra(field, args.n), fs),
                   args.output);
      return 0;
    }
    if (args.kind == "triangular") {
      emit_algebra(algebra_to_json(triangular_algebra(field, args.n), fs),
                   args.output);
      return 0;
    }
    if (args.kind == "path-algebra") {
      if (args.spec_file.empty())
        throw ParseError("path-algebra needs --spec FILE");
      auto j = load_json_file(args.spec_file);
      auto q = quiver_spec_from_json(j.contains("quiver") ? j["quiver"] : j);
      auto rels = relations_from_json(
          field, q, j.contains("relations") ? j["relations"] : ordered_json());
      std::optional<size_t> max_len;
      if (j.contains("max_len")) max_len = j["max_len"].get<size_t>();
      auto pa = path_algebra(field, q, rels, max_len);
      emit_algebra(algebra_to_json(pa.algebra, fs), args.output);
      return 0;
    }
    if (args.kind == "product") {
      if (args.inputs.empty())
        throw ParseError("product needs --inputs file1 file2 ...");
      std::vector<Algebra<F>> factors;
      for (const auto& path : args.inputs) {
        auto j = load_json_file(path);
        auto ffs = field_spec_of_file(j);
        if (ffs.characteristic != fs.characteristic)
          throw ParseError("product factors must share the base field");
        factors.push_back(algebra_from_json(field, j));
      }
      emit_algebra(algebra_to_json(direct_product(factors), fs), args.output);
      return 0;
    }
    if (args.kind == "skew-group") {
      if (args.algebra_file.empty() || args.action_file.empty())
        throw ParseError("skew-group needs --algebra FILE and --action FILE");
      auto ja = load_json_file(args.algebra_file);
      auto ffs = field_spec_of_file(ja);
      if (ffs.characteristic != fs.characteristic)
        throw ParseError("skew-group base field must match --char");
      auto lam = algebra_from_json(field, ja);
      if (!lam.validate().ok())
        throw ParseError("base algebra fails validation");
      auto act = group_action_from_json(field, lam,
                                        load_json_file(args.action_file));
      emit_algebra(algebra_to_json(skew_group_algebra(lam, act), fs),
                   args.output);
      return 0;
    }
    if (args.kind == "random-graded") {
      if (args.profile_file.empty())
        throw ParseError("random-graded needs --profile FILE");
      auto j = load_json_file(args.profile_file);
      GradedProfile prof;
      for (const auto& b : j.at("block_sizes"))
        prof.block_sizes.push_back(b.get<size_t>());
      for (const auto& row : j.at("multiplicities")) {
        prof.multiplicities.emplace_back();
        for (const auto& m : row)
          prof.multiplicities.back().push_back(m.get<size_t>());
      }
      prof.truncation = j.value("truncation", 2);
      prof.kernel_generators_per_degree = j.value("kernel_generators", 1);
      auto rg = random_radical_graded(field, prof, args.seed);
      emit_algebra(algebra_to_json(rg.graded.presentation, fs), args.output);
      return 0;
    }
    throw ParseError("unknown construct kind: " + args.kind);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact natural/ordinary quiver toolkit for finite-dimensional "
               "algebras"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for randomized searches");
  app.add_option("--oracle-limit", flags.oracle_limit,
                 "dimension cap for the generator-search oracle");
  app.add_option("--truncate", flags.truncate,
                 "tensor truncation override (default: Loewy length)");

  std::string input, output, kind = "natural", format = "dot",
                             suite = "all";

  auto* analyze_cmd = app.add_subcommand("analyze", "full analysis report");
  analyze_cmd->add_option("input", input, "algebra JSON file")->required();

  auto* quiver_cmd = app.add_subcommand("quiver", "export a quiver");
  quiver_cmd->add_option("input", input, "algebra JSON file")->required();
  quiver_cmd->add_option("--kind", kind, "natural|ordinary")
      ->check(CLI::IsMember({"natural", "ordinary"}));
  quiver_cmd->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  quiver_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("input", input, "algebra JSON file")->required();
  verify_cmd->add_option("--suite", suite, "prop12|graded|gabriel|basics|all")
      ->check(CLI::IsMember({"prop12", "graded", "gabriel", "basics", "all"}));

  ConstructArgs cargs;
  auto* construct_cmd = app.add_subcommand("construct", "build an instance");
  construct_cmd->add_option("kind", cargs.kind,
                            "paper-example|path-algebra|matrix|triangular|"
                            "product|skew-group|random-graded")
      ->required();
  construct_cmd->add_option("--char", cargs.characteristic,
                            "prime field characteristic");
  construct_cmd->add_flag("--rationals", cargs.rationals,
                          "work over the rationals");
  construct_cmd->add_option("--n", cargs.n, "matrix/triangular size");
  construct_cmd->add_option("--spec", cargs.spec_file,
                            "quiver spec JSON (path-algebra)");
  construct_cmd->add_option("--algebra", cargs.algebra_file,
                            "base algebra JSON (skew-group)");
  construct_cmd->add_option("--action", cargs.action_file,
                            "group action JSON (skew-group)");
  construct_cmd->add_option("--inputs", cargs.inputs,
                            "factor algebra files (product)");
  construct_cmd->add_option("--profile", cargs.profile_file,
                            "profile JSON (random-graded)");
  construct_cmd->add_option("-o,--output", cargs.output,
                            "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  cargs.seed = flags.seed;

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, flags);
    if (quiver_cmd->parsed()) return cmd_quiver(input, kind, format, output, flags);
    if (verify_cmd->parsed()) return cmd_verify(input, suite, flags);
    if (construct_cmd->parsed()) return cmd_construct(cargs);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadCharacteristicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfiniteDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
