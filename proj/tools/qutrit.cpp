// Copyright 2026 The Qutrit Sections Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qutrit: command-line front end for the qutrit state-space toolkit.
//
//   qutrit classify <file|->            invariants, vectors and purity class
//   qutrit section boundary|pure|report  per-section computations
//   qutrit atlas --k 2|3                 shape catalog of all sections
//   qutrit sample --kind pure|mixed|rank2
//
// Exit codes: 0 ok, 1 input error, 2 unphysical state, 3 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qutrit/catalog.hpp"
#include "qutrit/error.hpp"
#include "qutrit/io.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/sections.hpp"

namespace {

using qutrit::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUnphysical = 2;
constexpr int kExitMismatch = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Writes to --out when given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Flag wins over QUTRIT_TOL, which wins over the built-in default.
double ResolveTol(const CLI::Option* flag, double flag_value, double fallback) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("QUTRIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw InputError(std::string("QUTRIT_TOL is not a positive number: ") + env);
    return v;
  }
  return fallback;
}

std::vector<int> ParseIntList(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError(what + ": '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw InputError(what + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw InputError(what + " is empty");
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || *end != '\0') throw InputError(what + ": '" + tok + "' is not a number");
    out.push_back(v);
  }
  return out;
}

qutrit::SectionId ParseAxes(const std::string& text) {
  std::vector<int> axes = ParseIntList(text, "--axes");
  std::vector<int> sorted = axes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("--axes must be distinct");
  return qutrit::SectionId(std::move(axes));
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::string input = "-";
  double tol = qutrit::kDefaultClassifyTol;
  CLI::Option* tol_flag = nullptr;
};

int RunClassify(const ClassifyArgs& args) {
  const double tol = ResolveTol(args.tol_flag, args.tol, qutrit::kDefaultClassifyTol);
  const std::string text = ReadInput(args.input);

  std::vector<qutrit::io::StateDocument> docs;
  try {
    docs.push_back(qutrit::io::ParseStateDocument(text));
  } catch (const qutrit::Error& whole) {
    // Newline-delimited documents, as produced by `sample`.
    std::stringstream ss(text);
    std::string line;
    std::vector<qutrit::io::StateDocument> lines;
    bool multi = false;
    int count = 0;
    while (std::getline(ss, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ++count;
      lines.push_back(qutrit::io::ParseStateDocument(line));
    }
    multi = count > 1;
    if (!multi) throw;
    docs = std::move(lines);
  }

  int code = kExitOk;
  for (const auto& doc : docs) {
    const qutrit::DensityMatrix rho = qutrit::io::ToDensityMatrix(doc);
    const auto report = qutrit::io::BuildStateReport(rho, tol);
    const Json j = qutrit::io::ToJson(report);
    std::cout << (docs.size() == 1 ? j.dump(2) : j.dump()) << '\n';
    if (report.purity == qutrit::PurityClass::kNotAState) code = kExitUnphysical;
  }
  return code;
}

// ---- section --------------------------------------------------------------

struct SectionArgs {
  std::string axes;
  int resolution = 0;
  int samples = qutrit::kDefaultRaySamples;
  int grid = 41;
  int starts = 20000;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  CLI::Option* tol_flag = nullptr;
  std::string out;
  std::string format = "json";
  std::string coords;
  bool verify = false;
};

int RunBoundary(const SectionArgs& args) {
  const qutrit::SectionId id = ParseAxes(args.axes);
  const int resolution =
      args.resolution > 0 ? args.resolution : qutrit::DefaultResolution(id.order());
  const qutrit::PointCloud cloud =
      qutrit::BoundaryCloud(id, resolution, args.samples, args.seed);
  Output out(args.out);
  if (args.format == "csv") {
    qutrit::io::WriteCsv(out.stream(), cloud);
  } else {
    out.stream() << qutrit::io::ToJson(cloud).dump(2) << '\n';
  }
  return kExitOk;
}

int RunPure(const SectionArgs& args) {
  const qutrit::SectionId id = ParseAxes(args.axes);
  qutrit::PureSearchOptions opts;
  opts.grid_per_axis = args.grid;
  opts.starts = args.starts;
  opts.seed = args.seed;
  opts.tol = ResolveTol(args.tol_flag, args.tol, 1e-8);
  Output out(args.out);
  if (!args.verify) {
    out.stream() << qutrit::io::ToJson(qutrit::FindPureStates(id, opts)).dump(2) << '\n';
    return kExitOk;
  }
  if (!qutrit::FindExpectation(id))
    throw InputError("no embedded pure-state table for section " + id.ToString());
  const qutrit::CatalogReport rep = qutrit::VerifyCatalog(id, 1e-6, opts);
  Json j = qutrit::io::ToJson(rep);
  j["solutions"] = qutrit::io::ToJson(rep.solutions);
  out.stream() << j.dump(2) << '\n';
  return rep.matched ? kExitOk : kExitMismatch;
}

int RunReport(const SectionArgs& args) {
  const qutrit::SectionId id = ParseAxes(args.axes);
  const std::vector<double> coords = ParseDoubleList(args.coords, "--coords");
  const qutrit::SectionReport r = qutrit::ComputeSectionReport(id, coords);
  Output out(args.out);
  out.stream() << qutrit::io::ToJson(id, coords, r).dump(2) << '\n';
  return kExitOk;
}

// ---- atlas ----------------------------------------------------------------

struct AtlasArgs {
  int k = 2;
  bool verify = false;
  std::string out;
};

int RunAtlas(const AtlasArgs& args) {
  if (args.k != 2 && args.k != 3) throw InputError("--k must be 2 or 3");
  Json entries = Json::array();
  bool all_matched = true;
  for (const qutrit::SectionId& id : qutrit::EnumerateSections(args.k)) {
    Json e{{"axes", id.axes()},
           {"class", std::string(qutrit::SectionClassName(qutrit::ClassifySection(id)))}};
    if (const auto* exp = qutrit::FindExpectation(id)) {
      e["expected_pure"] = qutrit::io::ExpectedPureJson(*exp);
      if (args.verify) {
        const auto rep = qutrit::VerifyCatalog(id);
        all_matched = all_matched && rep.matched;
        e["found_pure"] = qutrit::io::ToJson(rep);
      }
    }
    entries.push_back(std::move(e));
  }
  Output out(args.out);
  out.stream() << entries.dump(2) << '\n';
  return all_matched ? kExitOk : kExitMismatch;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string kind;
  int n = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int RunSample(const SampleArgs& args) {
  using Generator = qutrit::DensityMatrix (*)(qutrit::RngStream&);
  static const std::map<std::string, Generator> kinds = {
      {"pure", &qutrit::RandomPure},
      {"mixed", &qutrit::RandomMixed},
      {"rank2", &qutrit::RandomRank2}};
  const auto it = kinds.find(args.kind);
  if (it == kinds.end()) throw InputError("--kind must be pure, mixed or rank2");
  if (args.n < 1) throw InputError("--n must be >= 1");
  qutrit::RngStream rng(args.seed);
  Output out(args.out);
  for (int i = 0; i < args.n; ++i)
    out.stream() << qutrit::io::ToJson(qutrit::io::MatrixDocument(it->second(rng))).dump()
                 << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qutrit state-space toolkit"};
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Classify a state document and report invariants");
  c->add_option("input", classify.input, "State document path, or - for stdin");
  classify.tol_flag = c->add_option("--tol", classify.tol, "Classification tolerance");

  SectionArgs section;
  auto* s = app.add_subcommand("section", "Section boundary, pure states and reports");
  s->require_subcommand(1);
  auto add_common = [&section](CLI::App* sub) {
    sub->add_option("--axes", section.axes, "Comma-separated axes in 1..8")->required();
    sub->add_option("--out", section.out, "Output path (default stdout)");
  };
  auto* boundary = s->add_subcommand("boundary", "Boundary point cloud");
  add_common(boundary);
  boundary->add_option("--resolution", section.resolution,
                       "Grid points per axis (default 201 for k<=2, 61 for k=3)");
  boundary->add_option("--samples", section.samples, "Rays for k>=4");
  boundary->add_option("--seed", section.seed, "Ray seed");
  boundary->add_option("--format", section.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  auto* pure = s->add_subcommand("pure", "Numerical pure-state search");
  add_common(pure);
  pure->add_option("--grid", section.grid, "Seeds per axis for k<=3");
  pure->add_option("--starts", section.starts, "Random starts for k>=4");
  pure->add_option("--seed", section.seed, "Random-start seed");
  section.tol_flag = pure->add_option("--tol", section.tol, "Purity residual tolerance");
  pure->add_flag("--verify", section.verify, "Compare against the embedded table");
  auto* report = s->add_subcommand("report", "Invariants and vector squares at a point");
  add_common(report);
  report->add_option("--coords", section.coords, "Comma-separated section coordinates")
      ->required();

  AtlasArgs atlas;
  auto* a = app.add_subcommand("atlas", "Shape catalog of all 2- or 3-sections");
  a->add_option("--k", atlas.k, "Section order (2 or 3)")->required();
  a->add_flag("--verify", atlas.verify, "Re-run the exemplar pure-state tables");
  a->add_option("--out", atlas.out, "Output path (default stdout)");

  SampleArgs sample;
  auto* sm = app.add_subcommand("sample", "Random states as newline-delimited documents");
  sm->add_option("--kind", sample.kind, "pure, mixed or rank2")->required();
  sm->add_option("--n", sample.n, "Number of states");
  sm->add_option("--seed", sample.seed, "Seed");
  sm->add_option("--out", sample.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*c) return RunClassify(classify);
    if (*boundary) return RunBoundary(section);
    if (*pure) return RunPure(section);
    if (*report) return RunReport(section);
    if (*a) return RunAtlas(atlas);
    if (*sm) return RunSample(sample);
  } catch (const qutrit::Error& e) {
    std::cerr << "error: " << qutrit::ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
