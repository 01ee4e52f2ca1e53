// opalg: structure theory of finite-dimensional operad algebras from the command line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "opalg/errors.hpp"
#include "opalg/presets.hpp"
#include "opalg/report.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kFieldGuard = 3, kTheorem = 4 };

struct Options {
  std::string input;
  std::string preset;
  std::string field = "Q";
  std::string ideal;
  std::string output = "json";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool list = false;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw opalg::ValidationError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

opalg::PresentationFile load(const Options& o) {
  if (!o.preset.empty()) {
    opalg::Preset p = opalg::build_preset(o.preset, opalg::field_from_name(o.field));
    return {std::move(p.algebra), std::move(p.action)};
  }
  return opalg::parse_presentation(read_all(o.input));
}

void emit(const opalg::Json& report, const Options& o) {
  if (o.output == "text") {
    std::cout << opalg::render_text(report);
  } else {
    std::cout << opalg::dump_canonical(report);
  }
}

int run(const std::string& command, const Options& o) {
  if (command == "preset") {
    if (o.list) {
      opalg::Json names = opalg::preset_names();
      emit(names, o);
      return kOk;
    }
    if (o.preset.empty()) throw opalg::ValidationError("preset needs a name");
    opalg::Preset p = opalg::build_preset(o.preset, opalg::field_from_name(o.field));
    emit(opalg::presentation_to_json(opalg::PresentationFile{std::move(p.algebra), std::move(p.action)}), o);
    return kOk;
  }
  const opalg::PresentationFile p = load(o);
  if (command == "analyze") {
    emit(opalg::analyze_report(p, {o.threads, o.seed}), o);
  } else if (command == "radical") {
    emit(opalg::radical_report(p), o);
  } else if (command == "decompose") {
    emit(opalg::decompose_report(p), o);
  } else if (command == "classify") {
    emit(opalg::classify_report(p), o);
  } else if (command == "check-ideal") {
    if (o.ideal.empty()) throw opalg::ValidationError("check-ideal needs --ideal FILE");
    opalg::Subspace ideal = opalg::parse_subspace(read_all(o.ideal), p.algebra.field(), p.algebra.dim());
    emit(opalg::check_ideal_report(p, ideal), o);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure theory of finite-dimensional algebras over linear operads"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Presentation JSON file ('-' or omitted: stdin)");
    sub->add_option("--preset", o.preset, "Preset name, e.g. matrix2 or fun_h_S3_S2_F@F5");
    sub->add_option("--field", o.field, "Field for presets: Q or F<p>");
    sub->add_option("--output", o.output, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", o.seed, "Work ordering for exhaustive enumeration");
    sub->add_option("--threads", o.threads, "Workers for exhaustive enumeration")->check(CLI::Range(1u, 256u));
  };
  for (const char* name : {"analyze", "radical", "decompose", "classify"}) common(app.add_subcommand(name));
  CLI::App* check = app.add_subcommand("check-ideal", "Run both ideal tests on a subspace");
  common(check);
  check->add_option("--ideal", o.ideal, "JSON file with basis vectors");
  CLI::App* preset = app.add_subcommand("preset", "Print a preset presentation");
  common(preset);
  preset->add_option("name", o.preset, "Preset name");
  preset->add_flag("--list", o.list, "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const opalg::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const opalg::FieldGuardError& e) {
    std::cerr << "field guard: " << e.what() << "\n";
    return kFieldGuard;
  } catch (const opalg::TheoremViolation& e) {
    std::cerr << e.what() << "\n";
    return kTheorem;
  }
}
