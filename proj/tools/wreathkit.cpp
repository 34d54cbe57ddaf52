#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wreathkit/catalog.hpp"
#include "wreathkit/checks.hpp"
#include "wreathkit/errors.hpp"
#include "wreathkit/serialize.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAxiomFailure = 1;
constexpr int kExitInputError = 2;

int do_check(const std::string& kind, const std::string& path, const std::string& report) {
  wreathkit::StructureBundle b = wreathkit::load_bundle(path);
  wreathkit::CheckReport rep = wreathkit::run_check(kind, b);
  if (report == "json")
    std::cout << wreathkit::report_to_json(rep);
  else
    std::cout << wreathkit::report_to_text(rep);
  return rep.all_pass() ? kExitPass : kExitAxiomFailure;
}

int do_build(const std::string& what, const std::string& path, const std::string& out) {
  wreathkit::StructureBundle b = wreathkit::load_bundle(path);
  wreathkit::BuildResult res = wreathkit::run_build(what, b);
  if (!res.verdict.empty()) std::cout << res.verdict << "\n";
  if (out.empty())
    std::cout << wreathkit::bundle_to_json(res.bundle);
  else
    wreathkit::save_bundle(res.bundle, out);
  return kExitPass;
}

int do_examples(const std::string& name, const std::string& field, std::uint64_t seed,
                const std::string& out) {
  if (name == "list") {
    for (const auto& n : wreathkit::example_names()) std::cout << n << "\n";
    return kExitPass;
  }
  wreathkit::FieldSpec f = wreathkit::FieldSpec::parse(field);
  wreathkit::StructureBundle b = wreathkit::make_example(name, f, seed);
  if (out.empty())
    std::cout << wreathkit::bundle_to_json(b);
  else
    wreathkit::save_bundle(b, out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wreathkit: exact verification of wreaths, cowreaths and their (co)rings"};
  app.require_subcommand(1);

  std::string kind, path, report = "text", what, out, name, field = "q";
  std::uint64_t seed = 0;

  CLI::App* check = app.add_subcommand("check", "verify the axioms of a structure in a bundle");
  check->add_option("kind", kind,
                    "one of: algebra, coalgebra, em-object, entwining, wreath, cowreath, "
                    "weak, bialgebroid, measuring, dk, ring, coring")
      ->required();
  check->add_option("path", path, "bundle file")->required();
  check->add_option("--report", report, "text|json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* build = app.add_subcommand("build", "construct a derived structure");
  build->add_option("what", what, "one of: wreath-product, ring, coring, recover")->required();
  build->add_option("path", path, "bundle file")->required();
  build->add_option("-o,--output", out, "output bundle path (stdout when omitted)");

  CLI::App* examples = app.add_subcommand("examples", "emit a catalog bundle ('list' to list)");
  examples->add_option("name", name, "catalog entry name")->required();
  examples->add_option("--field", field, "q or fp:<p>");
  examples->add_option("--seed", seed, "seed for the randomized entries");
  examples->add_option("-o,--output", out, "output bundle path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return do_check(kind, path, report);
    if (build->parsed()) return do_build(what, path, out);
    if (examples->parsed()) return do_examples(name, field, seed, out);
  } catch (const wreathkit::NotAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiomFailure;
  } catch (const wreathkit::InvalidWreath& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiomFailure;
  } catch (const wreathkit::InvalidCowreath& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAxiomFailure;
  } catch (const wreathkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
