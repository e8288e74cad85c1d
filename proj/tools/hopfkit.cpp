#include "cli/commands.hpp"

#include <CLI11.hpp>

using namespace hopfkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional quasitriangular Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out, "Write the report (for double: the algebra file) to this path");

  std::string path;
  std::string characters;
  std::string coalgebra = "full";
  std::string export_quotient;
  std::string export_morphism;
  std::string group;

  auto* verify = app.add_subcommand("verify", "Check the Hopf axioms and, if present, the R-matrix axioms");
  verify->add_option("algebra", path)->required();

  auto* analyze = app.add_subcommand("analyze", "Rank, H+/H-/H_R, flags, Drinfeld element and S-matrix");
  analyze->add_option("algebra", path)->required();
  analyze->add_option("--characters", characters, "Vector file with the irreducible characters");

  auto* quotient = app.add_subcommand("quotient", "Canonical quotient attached to a subcoalgebra of H*");
  quotient->add_option("algebra", path)->required();
  quotient->add_option("--coalgebra", coalgebra, "full, grouplikes or a vector file")->capture_default_str();
  quotient->add_option("--export-quotient", export_quotient, "Write the quotient algebra file");
  quotient->add_option("--export-morphism", export_morphism, "Write the projection as a morphism file");

  auto* enumerate = app.add_subcommand("enumerate-group", "Quasitriangular structures on a group algebra");
  enumerate->add_option("group", group, "Builtin name (Z<n>, S3, S4, Z7xZ3) or group file")->required();

  auto* dbl = app.add_subcommand("double", "Build and export the Drinfeld double");
  dbl->add_option("algebra", path)->required();

  auto* report = app.add_subcommand("report", "Classification report for odd square-free dimension");
  report->add_option("algebra", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Format fmt = format == "json" ? Format::Json : Format::Text;
  Sink sink{fmt, out.empty() ? std::nullopt : std::optional<std::filesystem::path>(out)};
  auto opt = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::filesystem::path>(s);
  };

  if (*verify) return emit(cmd_verify(path, fmt), sink);
  if (*analyze) return emit(cmd_analyze(path, opt(characters), fmt), sink);
  if (*quotient) {
    return emit(cmd_quotient(path, coalgebra, fmt, opt(export_quotient), opt(export_morphism)), sink);
  }
  if (*enumerate) return emit(cmd_enumerate_group(group, fmt), sink);
  if (*dbl) return emit(cmd_double(path, sink.out, fmt), Sink{fmt, std::nullopt});
  return emit(cmd_report(path, fmt), sink);
}
