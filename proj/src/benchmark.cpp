#include "cedom/benchmark.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cedom {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<VariantKind> parse_variant_list(std::string_view list, std::size_t line) {
  if (list == "all") return {std::begin(kAllVariants), std::end(kAllVariants)};
  std::vector<VariantKind> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    auto name = list.substr(pos, end - pos);
    auto kind = parse_variant(name);
    if (!kind) throw ParseError(line, "unknown variant '" + std::string(name) + "'");
    out.push_back(*kind);
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::vector<SuiteEntry> parse_suite(std::string_view text) {
  std::vector<SuiteEntry> suite;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string name;
    if (!(fields >> name) || name[0] == '#') continue;
    SuiteEntry entry;
    entry.name = name;
    if (!(fields >> entry.source)) throw ParseError(line, "suite entry '" + name + "' has no source");
    entry.variants = {std::begin(kAllVariants), std::end(kAllVariants)};
    for (std::string option; fields >> option;) {
      if (option.rfind("variants=", 0) == 0) {
        entry.variants = parse_variant_list(std::string_view(option).substr(9), line);
      } else if (option.rfind("x=", 0) == 0) {
        double x = 0.0;
        auto digits = std::string_view(option).substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw ParseError(line, "bad x value");
        entry.x = x;
      } else {
        throw ParseError(line, "unknown suite option '" + option + "'");
      }
    }
    suite.push_back(std::move(entry));
  }
  return suite;
}

std::vector<SuiteEntry> load_suite(const std::filesystem::path& path) { return parse_suite(read_file(path)); }

OptimaTable parse_optima(std::string_view json_text) {
  OptimaTable table;
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("optima file must hold a JSON object");
  for (const auto& [instance, variants] : doc.items()) {
    if (instance.rfind("_", 0) == 0) continue;  // "_comment" and similar
    for (const auto& [name, value] : variants.items()) {
      auto kind = parse_variant(name);
      if (!kind) throw std::invalid_argument("optima: unknown variant '" + name + "' for " + instance);
      KnownValue known;
      if (value.is_number_unsigned()) {
        known.value = value.get<std::size_t>();
      } else if (value.is_object()) {
        known.value = value.at("value").get<std::size_t>();
        known.exact = value.value("exact", true);
      } else {
        throw std::invalid_argument("optima: bad value for " + instance + "/" + name);
      }
      table[instance][*kind] = known;
    }
  }
  return table;
}

OptimaTable load_optima(const std::filesystem::path& path) { return parse_optima(read_file(path)); }

Instance load_suite_instance(const SuiteEntry& entry, const std::filesystem::path& base_dir) {
  Instance inst;
  if (entry.source.rfind("file:", 0) == 0) {
    std::filesystem::path path = entry.source.substr(5);
    if (path.is_relative()) path = base_dir / path;
    inst = load_instance(path);
  } else {
    inst = generate_instance(entry.source);
  }
  inst.name = entry.name;
  return inst;
}

std::vector<ResultRecord> run_benchmark(const std::vector<SuiteEntry>& suite,
                                        const std::filesystem::path& base_dir, const OptimaTable& optima,
                                        const BenchmarkOptions& options) {
  if (options.seeds.empty()) throw std::invalid_argument("benchmark needs at least one seed");
  options.params.validate();
  std::vector<Instance> instances;
  instances.reserve(suite.size());
  for (const auto& entry : suite) instances.push_back(load_suite_instance(entry, base_dir));

  std::vector<ResultRecord> records;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const Instance& inst = instances[i];
    const NeighborhoodTables tables = build_tables(inst.graph);
    for (VariantKind kind : suite[i].variants) {
      ResultRecord record;
      if (!is_feasible(inst.graph, kind)) {
        record = infeasible_record(inst, kind, options.params, options.seeds);
      } else {
        auto runs = ce_multi(inst.graph, tables, kind, options.params, options.seeds, options.threads);
        record = make_record(inst, kind, options.params, options.seeds, runs);
      }
      if (auto it = optima.find(inst.name); it != optima.end()) {
        if (auto v = it->second.find(kind); v != it->second.end()) record.known = v->second;
      }
      if (options.on_record) options.on_record(record);
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string series_csv(const std::vector<SuiteEntry>& suite, const std::vector<ResultRecord>& records) {
  std::map<std::string, std::optional<double>> x_of;
  for (const auto& e : suite) x_of[e.name] = e.x;
  std::string out = "variant,x,instance,ce_best,known,mean_seconds\n";
  for (VariantKind kind : kAllVariants) {
    for (const auto& r : records) {
      if (r.variant != kind || !r.feasible) continue;
      auto it = x_of.find(r.instance);
      if (it == x_of.end() || !it->second) continue;
      std::string name = r.instance;
      if (name.find_first_of(",\"") != std::string::npos) name = "\"" + name + "\"";
      out += std::string(variant_name(kind)) + "," + format_double(*it->second) + "," + name + "," +
             std::to_string(r.best_score) + "," + (r.known ? std::to_string(r.known->value) : "") + "," +
             format_seconds(r.mean_seconds()) + "\n";
    }
  }
  return out;
}

void write_outputs(const std::filesystem::path& prefix, const std::vector<ResultRecord>& records,
                   const std::vector<SuiteEntry>& suite) {
  if (prefix.has_parent_path()) std::filesystem::create_directories(prefix.parent_path());
  const std::string base = prefix.string();
  write_file(base + ".csv", to_csv(records));
  write_file(base + ".json", to_json(records));
  const bool has_series = std::any_of(suite.begin(), suite.end(), [](const SuiteEntry& e) { return e.x.has_value(); });
  if (has_series) write_file(base + "_series.csv", series_csv(suite, records));
}

}  // namespace cedom
