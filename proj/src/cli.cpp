#include "acn/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "acn/dsl.hpp"
#include "acn/errors.hpp"
#include "acn/raf.hpp"

namespace acn::cli {
namespace {

using json = nlohmann::json;

// Malformed flag values; mapped to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

template <class Set>
std::string braced(const Set& ids) {
  std::string s = "{";
  for (const auto& id : ids) {
    if (s.size() > 1) s += ", ";
    s += id;
  }
  return s + "}";
}

template <class Set>
std::string joined(const Set& ids, std::string_view sep) {
  std::string s;
  for (const auto& id : ids) {
    if (!s.empty()) s += sep;
    s += id;
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct LoadedSystem {
  std::string text;
  ReactionSystem system;
};

LoadedSystem load_system(const std::string& path) {
  LoadedSystem loaded{read_file(path), {}};
  try {
    loaded.system = parse_system(loaded.text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
  return loaded;
}

double parse_double(std::string_view text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

Tick parse_tick(std::string_view text) {
  Tick v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid tick '" + std::string(text) + "'");
  }
  return v;
}

std::string criterion_name(const TransitionCriterion& c) {
  if (std::holds_alternative<MaxSlope>(c)) return "max-slope";
  return "crossing:" + num(std::get<Crossing>(c).threshold);
}

void add_format_flags(CLI::App* cmd, bool& csv, bool& structured) {
  auto* c = cmd->add_flag("--csv", csv, "Emit CSV with a header row");
  auto* s = cmd->add_flag("--structured", structured, "Emit JSON");
  c->excludes(s);
}

Format pick(bool csv, bool structured) {
  return csv ? Format::Csv : structured ? Format::Structured : Format::Text;
}

json header(std::string_view command, std::string_view digest_source) {
  return json{{"command", command}, {"input_digest", input_digest(digest_source)}};
}

void emit_analyze(const LoadedSystem& in, Format fmt, std::ostream& out) {
  const auto& sys = in.system;
  const Classification c = classify(sys);
  ElementSet base = sys.foodset();
  base.merge(sys.stimuli());
  const ElementSet reached = closure(sys, base, sys.reaction_ids());

  switch (fmt) {
    case Format::Text:
      out << "elements: " << sys.elements.size() << " (food " << sys.foodset().size()
          << ", derived " << sys.elements_of_kind(ElementKind::Derived).size() << ", stimulus "
          << sys.stimuli().size() << ")\n"
          << "reactions: " << sys.reactions.size() << "\n"
          << "closure of food and stimuli: " << braced(reached) << "\n"
          << "max RAF with stimuli: " << braced(c.max_raf_with_stimuli) << "\n"
          << "max RAF without stimuli: " << braced(c.max_raf_without_stimuli) << "\n"
          << "verdict: " << to_string(c.verdict) << "\n";
      break;
    case Format::Csv:
      out << "reaction,in_max_raf_with_stimuli,in_max_raf_without_stimuli\n";
      for (const auto& id : sys.reaction_ids()) {
        out << csv_field(id) << ',' << c.max_raf_with_stimuli.contains(id) << ','
            << c.max_raf_without_stimuli.contains(id) << '\n';
      }
      break;
    case Format::Structured: {
      json j = header("analyze", in.text);
      j["elements"] = json::object();
      for (const auto& [id, kind] : sys.elements) j["elements"][id] = to_string(kind);
      j["reactions"] = sys.reaction_ids();
      j["closure"] = reached;
      j["max_raf_with_stimuli"] = c.max_raf_with_stimuli;
      j["max_raf_without_stimuli"] = c.max_raf_without_stimuli;
      j["verdict"] = to_string(c.verdict);
      out << j.dump(2) << '\n';
      break;
    }
  }
}

void emit_classify(const LoadedSystem& in, Format fmt, std::ostream& out) {
  const Classification c = classify(in.system);
  switch (fmt) {
    case Format::Text:
      out << to_string(c.verdict) << '\n';
      break;
    case Format::Csv:
      out << "verdict\n" << to_string(c.verdict) << '\n';
      break;
    case Format::Structured: {
      json j = header("classify", in.text);
      j["verdict"] = to_string(c.verdict);
      j["max_raf_with_stimuli"] = c.max_raf_with_stimuli;
      j["max_raf_without_stimuli"] = c.max_raf_without_stimuli;
      out << j.dump(2) << '\n';
      break;
    }
  }
}

void emit_trace(const LoadedSystem& in, const GrowthTrace& trace, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::Text: {
      out << "tick present fired\n";
      for (const auto& t : trace.ticks) {
        out << t.tick << ' ' << joined(t.present, ",") << ' '
            << (t.fired.empty() ? "-" : joined(t.fired, ",")) << '\n';
      }
      out << "first_appearance:\n";
      for (const auto& [id, tick] : trace.first_appearance) out << "  " << id << ' ' << tick << '\n';
      out << "self_sustaining_from: ";
      if (trace.self_sustaining_from) {
        out << *trace.self_sustaining_from << '\n';
      } else {
        out << "none\n";
      }
      break;
    }
    case Format::Csv:
      out << "tick,present,fired\n";
      for (const auto& t : trace.ticks) {
        out << t.tick << ',' << csv_field(joined(t.present, ",")) << ','
            << csv_field(joined(t.fired, ",")) << '\n';
      }
      break;
    case Format::Structured: {
      json j = header("grow", in.text);
      j["ticks"] = json::array();
      for (const auto& t : trace.ticks) {
        j["ticks"].push_back({{"tick", t.tick},
                              {"present", t.present},
                              {"fired", t.fired},
                              {"self_sustaining", t.self_sustaining}});
      }
      j["first_appearance"] = trace.first_appearance;
      j["self_sustaining_from"] =
          trace.self_sustaining_from ? json(*trace.self_sustaining_from) : json(nullptr);
      out << j.dump(2) << '\n';
      break;
    }
  }
}

void emit_sweep(std::string_view command, std::string_view digest_source,
                const SweepResult& result, Format fmt, std::ostream& out, std::ostream& err) {
  const auto& curve = result.curve;
  switch (fmt) {
    case Format::Text:
      out << "control observable\n";
      for (const auto& p : curve.points) out << num(p.control) << ' ' << num(p.observable) << '\n';
      out << "trials: " << curve.trials_per_point << "\n"
          << "seed: " << curve.seed << "\n"
          << "criterion: " << criterion_name(result.criterion) << "\n"
          << "transition_estimate: " << num(result.transition_estimate) << '\n';
      break;
    case Format::Csv:
      out << "control,observable,trials\n";
      for (const auto& p : curve.points) {
        out << num(p.control) << ',' << num(p.observable) << ',' << curve.trials_per_point << '\n';
      }
      // Standard output stays a plain CSV table.
      err << "transition_estimate: " << num(result.transition_estimate) << '\n';
      break;
    case Format::Structured: {
      json j = header(command, digest_source);
      j["points"] = json::array();
      for (const auto& p : curve.points) {
        j["points"].push_back({{"control", p.control}, {"observable", p.observable}});
      }
      j["trials"] = curve.trials_per_point;
      j["seed"] = curve.seed;
      j["criterion"] = criterion_name(result.criterion);
      j["transition_estimate"] = result.transition_estimate;
      out << j.dump(2) << '\n';
      break;
    }
  }
}

std::string joined_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += a + '\0';
  return s;
}

}  // namespace

TransitionCriterion parse_criterion(std::string_view text) {
  if (text == "max-slope") return MaxSlope{};
  constexpr std::string_view prefix = "crossing:";
  if (text.starts_with(prefix)) {
    return Crossing{parse_double(text.substr(prefix.size()), "crossing threshold")};
  }
  throw UsageError("invalid criterion '" + std::string(text) +
                   "' (expected max-slope or crossing:<threshold>)");
}

std::vector<double> parse_p_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_double(piece, "probability"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<ElementId, TickInterval> parse_stimulus_flag(std::string_view text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..", eq == text.npos ? 0 : eq);
  if (eq == text.npos || eq == 0 || dots == text.npos) {
    throw UsageError("invalid --stimulus '" + std::string(text) + "' (expected id=start..end)");
  }
  return {std::string(text.substr(0, eq)),
          {parse_tick(text.substr(eq + 1, dots - eq - 1)), parse_tick(text.substr(dots + 2))}};
}

std::string input_digest(std::string_view bytes) {
  // 64-bit FNV-1a.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string s = "\"";
  for (char c : field) {
    if (c == '"') s += '"';
    s += c;
  }
  return s + '"';
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Autocatalytic network toolkit", "acn"};
  app.require_subcommand(1);

  bool csv = false, structured = false;

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Closure, max RAF and verdict for a system");
  analyze->add_option("file", path, "Reaction system (.acn)")->required();
  add_format_flags(analyze, csv, structured);

  auto* classify_cmd = app.add_subcommand("classify", "Print NONE, TRANSIENT or SELF_SUSTAINING");
  classify_cmd->add_option("file", path, "Reaction system (.acn)")->required();
  add_format_flags(classify_cmd, csv, structured);

  std::vector<std::string> stimulus_flags;
  Tick max_ticks = 100;
  auto* grow = app.add_subcommand("grow", "Simulate growth under a stimulus schedule");
  grow->add_option("file", path, "Reaction system (.acn)")->required();
  grow->add_option("--stimulus", stimulus_flags, "Active interval, id=start..end (repeatable)");
  grow->add_option("--max-ticks", max_ticks, "Tick limit")->capture_default_str();
  add_format_flags(grow, csv, structured);

  std::size_t nodes = 100000, trials = 20, steps = 50;
  double ratio_max = 1.0;
  std::uint64_t seed = 0;
  std::string criterion_text;
  auto* percolate = app.add_subcommand("percolate", "Giant-component sweep on G(n, m)");
  percolate->add_option("--nodes", nodes)->capture_default_str();
  percolate->add_option("--trials", trials)->capture_default_str();
  percolate->add_option("--ratio-max", ratio_max, "Largest edge/node ratio")->capture_default_str();
  percolate->add_option("--steps", steps)->capture_default_str();
  percolate->add_option("--seed", seed)->capture_default_str();
  percolate->add_option("--criterion", criterion_text, "max-slope | crossing:<t> (crossing:0.1)");
  add_format_flags(percolate, csv, structured);

  RandomSystemConfig base;
  std::string p_list = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5,0.55,0.6,0.65,0.7,0.75,"
                       "0.8,0.85,0.9,0.95,1";
  std::size_t raf_trials = 200;
  auto* rafsweep = app.add_subcommand("rafsweep", "RAF emergence versus catalysis probability");
  rafsweep->add_option("--food", base.n_food)->capture_default_str();
  rafsweep->add_option("--derived", base.n_derived)->capture_default_str();
  rafsweep->add_option("--reactions-per-derived", base.reactions_per_derived)
      ->capture_default_str();
  rafsweep->add_option("--p-list", p_list, "Comma-separated, strictly increasing");
  rafsweep->add_option("--trials", raf_trials)->capture_default_str();
  rafsweep->add_option("--seed", seed)->capture_default_str();
  rafsweep->add_option("--criterion", criterion_text, "max-slope | crossing:<t> (crossing:0.5)");
  add_format_flags(rafsweep, csv, structured);

  std::string stage_text, out_dir;
  auto* fixtures = app.add_subcommand("fixtures", "Emit the four figure-stage systems");
  fixtures->add_option("--stage", stage_text, "A, B, C or D (default: all)");
  fixtures->add_option("--out-dir", out_dir, "Write stageX.acn files here");
  fixtures->add_flag("--structured", structured, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Format fmt = pick(csv, structured);
  try {
    if (analyze->parsed()) {
      emit_analyze(load_system(path), fmt, out);
    } else if (classify_cmd->parsed()) {
      emit_classify(load_system(path), fmt, out);
    } else if (grow->parsed()) {
      StimulusSchedule schedule;
      for (const auto& flag : stimulus_flags) {
        auto [id, interval] = parse_stimulus_flag(flag);
        schedule.intervals[id].push_back(interval);
      }
      for (auto& [id, list] : schedule.intervals) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.start < b.start; });
      }
      const auto loaded = load_system(path);
      emit_trace(loaded, run_growth(loaded.system, schedule, max_ticks), fmt, out);
    } else if (percolate->parsed()) {
      const auto criterion =
          parse_criterion(criterion_text.empty() ? "crossing:0.1" : criterion_text);
      const auto result = sweep_giant_component(nodes, ratio_max, steps, trials, seed, criterion);
      emit_sweep("percolate", joined_args(args), result, fmt, out, err);
    } else if (rafsweep->parsed()) {
      const auto criterion =
          parse_criterion(criterion_text.empty() ? "crossing:0.5" : criterion_text);
      const auto ps = parse_p_list(p_list);
      const auto result = raf_phase_sweep(base, ps, raf_trials, seed, criterion);
      emit_sweep("rafsweep", joined_args(args), result, fmt, out, err);
    } else if (fixtures->parsed()) {
      std::vector<FigureStage> stages = {FigureStage::A, FigureStage::B, FigureStage::C,
                                         FigureStage::D};
      if (!stage_text.empty()) stages = {parse_stage(stage_text)};
      json j = json::object();
      bool first = true;
      for (const auto stage : stages) {
        const std::string name = std::string("stage") + stage_letter(stage);
        const std::string text = serialize_system(figure_system(stage));
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          const auto file = std::filesystem::path(out_dir) / (name + ".acn");
          std::ofstream f(file, std::ios::binary);
          if (!(f << text)) throw InputError("cannot write '" + file.string() + "'");
          if (!structured) out << file.string() << '\n';
        } else if (!structured) {
          if (!first) out << '\n';
          out << "# " << name << '\n' << text;
        }
        j[std::string(1, stage_letter(stage))] = text;
        first = false;
      }
      if (structured) out << j.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace acn::cli
