// fca — command line front end for the concept analysis library.
//
// Data goes to files or stdout; progress and counts go to stderr so that
// outputs stay byte-stable and pipeline-friendly. Exit codes: 0 success,
// 1 input/validation error, 2 capacity/resource error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "fca/binarize.hpp"
#include "fca/context_io.hpp"
#include "fca/contrast.hpp"
#include "fca/errors.hpp"
#include "fca/generate.hpp"
#include "fca/lattice.hpp"
#include "fca/mining.hpp"
#include "fca/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fca::Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fca::Error("cannot write file: " + path);
  out << content;
  if (!out) throw fca::Error("write failed: " + path);
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw fca::Error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

fca::FormalContext load_context(const std::string& path) {
  const std::string text = read_file(path);
  if (ends_with(path, ".csv")) return fca::parse_context_csv(text);
  if (ends_with(path, ".cxt")) return fca::parse_cxt(text);
  if (text.rfind("B\n", 0) == 0 || text.rfind("B\r\n", 0) == 0) return fca::parse_cxt(text);
  return fca::parse_context_csv(text);
}

struct MineArgs {
  std::string input;
  std::string output = "-";
  std::optional<double> min_support;
  unsigned threads = 0;
  std::size_t max_concepts = std::numeric_limits<std::size_t>::max();
};

int run_mine(const MineArgs& args) {
  const fca::FormalContext ctx = load_context(args.input);
  const auto start = std::chrono::steady_clock::now();
  fca::MiningOptions options;
  options.threads = args.threads;
  options.max_concepts = args.max_concepts;
  std::vector<fca::Concept> concepts = fca::enumerate_concepts(ctx, options);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  const std::size_t total = concepts.size();
  if (args.min_support) concepts = fca::iceberg(concepts, *args.min_support);

  std::ostringstream out;
  fca::write_concepts_jsonl(ctx, concepts, out);
  write_output(args.output, out.str());

  std::cerr << total << " concepts";
  if (args.min_support) std::cerr << ", " << concepts.size() << " above " << *args.min_support << "%";
  std::cerr << " in " << elapsed << " ms\n";
  return 0;
}

struct LatticeArgs {
  std::string input;
  std::string output = "-";
  std::optional<double> min_support;
  unsigned threads = 0;
};

int run_lattice(const LatticeArgs& args) {
  const fca::FormalContext ctx = load_context(args.input);
  fca::MiningOptions options;
  options.threads = args.threads;
  std::vector<fca::Concept> concepts = fca::enumerate_concepts(ctx, options);
  fca::ConceptLattice lattice;
  if (args.min_support) {
    concepts = fca::iceberg(concepts, *args.min_support);
    lattice = fca::build_cover_diagram(ctx, std::move(concepts));
  } else {
    lattice = fca::build_lattice(ctx, std::move(concepts));
  }
  write_output(args.output, fca::export_dot(ctx, lattice));
  std::cerr << lattice.concepts.size() << " concepts, " << lattice.covers.size()
            << " covering edges\n";
  return 0;
}

struct BinarizeArgs {
  std::string input;
  std::string roles_path;
  std::string schema_in;  // reuse an existing schema instead of inferring
  std::string output = "context.cxt";
  std::string schema_out = "schema.json";
};

int run_binarize(const BinarizeArgs& args) {
  const fca::RoleConfig roles = fca::parse_role_config(read_file(args.roles_path));
  const fca::TraitCsv csv = fca::parse_trait_csv(read_file(args.input), roles);
  const fca::BinarizationSchema schema = args.schema_in.empty()
                                             ? fca::infer_schema(csv.table)
                                             : fca::schema_from_json(read_file(args.schema_in));
  const fca::FormalContext ctx = fca::apply_schema(csv.table, schema);
  write_output(args.output, fca::write_cxt(ctx));
  write_output(args.schema_out, fca::schema_to_json(schema));
  std::cerr << ctx.object_count() << " objects, " << ctx.attribute_count() << " attributes\n";
  return 0;
}

struct ContrastArgs {
  std::string input;
  std::string roles_path;
  std::string label_column;
  std::string positive_value;
  double min_support = 0.0;
  std::string output = "report.json";
  std::string dot_output;
  unsigned threads = 0;
};

int run_contrast(const ContrastArgs& args) {
  const std::string input_text = read_file(args.input);
  fca::RoleConfig roles = fca::parse_role_config(read_file(args.roles_path));
  if (!args.label_column.empty()) roles.label_column = args.label_column;
  if (!roles.label_column) throw fca::Error("no label column given (--label or role config)");
  std::string positive = args.positive_value;
  if (positive.empty()) positive = roles.positive_value.value_or("1");

  fca::TraitCsv csv = fca::parse_trait_csv(input_text, roles);
  const fca::LabeledDataset dataset = fca::make_labeled_dataset(std::move(csv), positive);

  fca::MiningOptions mining;
  mining.threads = args.threads;
  const fca::ContrastReport report = fca::run_pipeline(dataset, args.min_support, mining);

  fca::Provenance provenance{sha256_hex(input_text), fca::kVersion};
  write_output(args.output, fca::report_to_json(report, provenance));

  if (!args.dot_output.empty()) {
    fca::ConceptLattice diagram =
        fca::build_cover_diagram(report.positive_context, report.iceberg);
    write_output(args.dot_output, fca::export_dot(report.positive_context, diagram));
  }

  std::cerr << report.positive_concept_count << " positive / " << report.negative_concept_count
            << " negative concepts, " << report.reduced.size() << " after reduction, "
            << report.iceberg.size() << " in the " << args.min_support << "% iceberg\n";
  return 0;
}

struct ConvertArgs {
  std::string input;
  std::string output = "-";
  std::string to;  // "cxt" or "csv"; empty = opposite of the input format
};

int run_convert(const ConvertArgs& args) {
  const fca::FormalContext ctx = load_context(args.input);
  std::string to = args.to;
  if (to.empty()) to = ends_with(args.input, ".csv") ? "cxt" : "csv";
  if (to == "cxt")
    write_output(args.output, fca::write_cxt(ctx));
  else if (to == "csv")
    write_output(args.output, fca::write_context_csv(ctx));
  else
    throw fca::Error("unknown target format \"" + to + "\"");
  return 0;
}

struct GenArgs {
  std::size_t objects = 0;
  std::size_t attributes = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int run_gen(const GenArgs& args) {
  const fca::FormalContext ctx =
      fca::random_context(args.objects, args.attributes, args.density, args.seed);
  write_output(args.output, fca::write_cxt(ctx));
  std::cerr << ctx.object_count() << " objects, " << ctx.attribute_count() << " attributes, "
            << ctx.incidence_count() << " incidences\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fca — concept lattice toolkit for binary contexts"};
  app.set_version_flag("--version", fca::kVersion);
  app.require_subcommand(1);

  MineArgs mine_args;
  auto* mine = app.add_subcommand("mine", "Enumerate all formal concepts of a context");
  mine->add_option("input", mine_args.input, "Context file (.cxt or binary CSV)")->required();
  mine->add_option("-o,--output", mine_args.output, "Output path (JSONL; '-' = stdout)");
  mine->add_option("--min-support", mine_args.min_support, "Keep concepts with support >= this %")
      ->check(CLI::Range(0.0, 100.0));
  mine->add_option("--threads", mine_args.threads, "Worker threads (0 = all cores)");
  mine->add_option("--max-concepts", mine_args.max_concepts, "Capacity limit");

  LatticeArgs lattice_args;
  auto* lattice = app.add_subcommand("lattice", "Emit the concept lattice as DOT");
  lattice->add_option("input", lattice_args.input, "Context file")->required();
  lattice->add_option("-o,--output", lattice_args.output, "Output path (DOT)");
  lattice->add_option("--min-support", lattice_args.min_support, "Iceberg threshold %")
      ->check(CLI::Range(0.0, 100.0));
  lattice->add_option("--threads", lattice_args.threads, "Worker threads (0 = all cores)");

  BinarizeArgs binarize_args;
  auto* binarize = app.add_subcommand("binarize", "Discretize a trait CSV into a context");
  binarize->add_option("input", binarize_args.input, "Trait CSV")->required();
  binarize->add_option("--roles", binarize_args.roles_path, "Role config JSON")->required();
  binarize->add_option("--schema", binarize_args.schema_in,
                       "Existing schema JSON to reapply (skips inference)");
  binarize->add_option("-o,--output", binarize_args.output, "Context output (.cxt)");
  binarize->add_option("--schema-out", binarize_args.schema_out, "Schema output (JSON)");

  ContrastArgs contrast_args;
  auto* contrast =
      app.add_subcommand("contrast", "Positive/negative concept analysis of a labeled CSV");
  contrast->add_option("input", contrast_args.input, "Labeled trait CSV")->required();
  contrast->add_option("--roles", contrast_args.roles_path, "Role config JSON")->required();
  contrast->add_option("--label", contrast_args.label_column, "Label column name");
  contrast->add_option("--positive", contrast_args.positive_value,
                       "Label value marking the positive class (default \"1\")");
  contrast->add_option("--min-support", contrast_args.min_support, "Iceberg threshold %")
      ->check(CLI::Range(0.0, 100.0));
  contrast->add_option("-o,--output", contrast_args.output, "Report output (JSON)");
  contrast->add_option("--dot", contrast_args.dot_output, "Also write the iceberg diagram (DOT)");
  contrast->add_option("--threads", contrast_args.threads, "Worker threads (0 = all cores)");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert between .cxt and binary CSV");
  convert->add_option("input", convert_args.input, "Context file")->required();
  convert->add_option("-o,--output", convert_args.output, "Output path");
  convert->add_option("--to", convert_args.to, "Target format: cxt or csv");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random context");
  gen->add_option("--objects", gen_args.objects, "Object count")->required();
  gen->add_option("--attributes", gen_args.attributes, "Attribute count")->required();
  gen->add_option("--density", gen_args.density, "Incidence probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("-o,--output", gen_args.output, "Output path (.cxt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (mine->parsed()) return run_mine(mine_args);
    if (lattice->parsed()) return run_lattice(lattice_args);
    if (binarize->parsed()) return run_binarize(binarize_args);
    if (contrast->parsed()) return run_contrast(contrast_args);
    if (convert->parsed()) return run_convert(convert_args);
    if (gen->parsed()) return run_gen(gen_args);
  } catch (const fca::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
