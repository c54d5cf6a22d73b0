#include "multiswap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "multiswap/errors.hpp"
#include "multiswap/layout.hpp"
#include "multiswap/simulator.hpp"

namespace multiswap {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Amplitude parse_amplitude(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw DataError(path + ": expected a number or [re, im]");
}

std::uint64_t parse_outcome_bits(const std::string& bits) {
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DataError("outcome '" + bits + "' is not a bitstring");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

}  // namespace

StateEnsemble parse_states_json(std::string_view text, bool normalize_inputs) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("$: expected an object with 'width' and 'states'");
  if (!doc.contains("width") || !doc["width"].is_number_integer() || doc["width"].get<long long>() < 1) {
    throw DataError("width: expected an integer >= 1");
  }
  const auto width = static_cast<std::size_t>(doc["width"].get<long long>());
  if (width > 20) throw DataError("width: " + std::to_string(width) + " qubits per state is too wide");
  if (!doc.contains("states") || !doc["states"].is_array()) {
    throw DataError("states: expected an array of amplitude arrays");
  }
  const std::size_t dim = std::size_t{1} << width;
  std::vector<PureState> states;
  const auto& arr = doc["states"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "states[" + std::to_string(i) + "]";
    if (!arr[i].is_array()) throw DataError(path + ": expected an array of amplitudes");
    if (arr[i].size() != dim) {
      throw DataError(path + ": expected " + std::to_string(dim) + " amplitudes for width " +
                      std::to_string(width) + ", found " + std::to_string(arr[i].size()));
    }
    std::vector<Amplitude> raw;
    for (std::size_t k = 0; k < dim; ++k) {
      raw.push_back(parse_amplitude(arr[i][k], path + "[" + std::to_string(k) + "]"));
    }
    try {
      states.push_back(normalize_inputs ? normalize(std::move(raw)) : PureState(std::move(raw)));
    } catch (const DataError& e) {
      throw DataError(path + ": " + e.what() +
                      (normalize_inputs ? "" : " (pass --normalize to rescale)"));
    }
  }
  if (states.size() < 2) throw DataError("states: need at least two states");
  return StateEnsemble(std::move(states));
}

StateEnsemble load_states(const std::filesystem::path& path, bool normalize_inputs) {
  try {
    return parse_states_json(read_file(path), normalize_inputs);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string states_to_json(const StateEnsemble& ensemble) {
  ordered_json doc;
  doc["width"] = ensemble.width();
  doc["states"] = ordered_json::array();
  for (const auto& s : ensemble.states()) {
    ordered_json amps = ordered_json::array();
    for (const auto& a : s.amplitudes()) amps.push_back({a.real(), a.imag()});
    doc["states"].push_back(amps);
  }
  return doc.dump(2) + "\n";
}

CountsTable parse_counts(std::istream& in) {
  std::optional<Scheme> scheme;
  std::optional<SwapTestVariant> final_variant;
  std::optional<CountsTable> table;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (const auto colon = line.find(':'); colon != std::string::npos) {
        const std::string key = trim(line.substr(0, colon));
        const std::string value = trim(line.substr(colon + 1));
        if (key == "scheme") {
          scheme = parse_scheme(value);
        } else if (key == "final") {
          final_variant = parse_variant(value);
        } else if (key == "layout") {
          if (table) throw DataError("layout declared twice");
          table.emplace(split_ws(value));
        } else {
          throw DataError("unknown header '" + key + "'");
        }
        continue;
      }
      const auto parts = split_ws(line);
      if (parts.size() != 2) throw DataError("expected '<bits> <count>'");
      if (!table) throw DataError("data before the 'layout:' header");
      std::size_t used = 0;
      unsigned long long count = 0;
      try {
        count = std::stoull(parts[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != parts[1].size() || parts[1].front() == '-') {
        throw DataError("count '" + parts[1] + "' is not a non-negative integer");
      }
      table->add(parts[0], count);
    } catch (const ConfigError& e) {
      throw DataError(where() + e.what());
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    }
  }
  if (!table) throw DataError("counts file has no 'layout:' header");
  table->scheme = scheme;
  table->final_variant = final_variant;
  return *table;
}

CountsTable load_counts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  try {
    return parse_counts(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_counts(std::ostream& out, const CountsTable& counts) {
  out << "# total " << counts.total() << "\n";
  if (counts.scheme) out << "scheme: " << scheme_name(*counts.scheme) << "\n";
  out << "layout:";
  for (const auto& l : counts.labels()) out << ' ' << l;
  out << "\n";
  if (counts.final_variant) out << "final: " << variant_name(*counts.final_variant) << "\n";
  for (const auto& [bits, c] : counts.counts()) out << bits << ' ' << c << "\n";
}

ReferenceTable parse_reference_csv(std::istream& in) {
  ReferenceTable table;
  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> columns;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_csv(line);
    if (columns.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) columns[cells[i]] = i;
      for (const char* need : {"pair_i", "pair_j", "exact"}) {
        if (!columns.contains(need)) {
          throw DataError("reference CSV is missing column '" + std::string(need) + "'");
        }
      }
      continue;
    }
    const auto cell = [&](const char* name) -> std::string {
      const auto it = columns.find(name);
      return it == columns.end() || it->second >= cells.size() ? std::string{} : cells[it->second];
    };
    try {
      const auto i = std::stoul(cell("pair_i"));
      const auto j = std::stoul(cell("pair_j"));
      ReferenceValue v;
      v.exact = std::stod(cell("exact"));
      if (const auto e = cell("estimate"); !e.empty() && e != "unsampled") v.estimate = std::stod(e);
      table[make_pair_key(i, j)] = v;
    } catch (const std::logic_error&) {
      throw DataError("reference CSV line " + std::to_string(line_no) + ": malformed row");
    }
  }
  return table;
}

ReferenceTable load_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return parse_reference_csv(in);
}

void write_estimates_csv(std::ostream& out, const std::vector<OverlapEstimate>& estimates) {
  out << "pair_i,pair_j,exact,estimate,samples,stderr\n";
  for (const auto& e : estimates) {
    out << e.pair.first << ',' << e.pair.second << ',' << fmt(e.exact) << ','
        << (e.estimate ? fmt(*e.estimate) : "unsampled") << ',' << e.samples << ','
        << (e.stderr_bound ? fmt(*e.stderr_bound) : "") << "\n";
  }
}

void write_scatter_csv(std::ostream& out, const ScatterData& scatter) {
  out << "# rows " << scatter.rows.size() << ", unsampled " << scatter.unsampled
      << ", max_abs_error " << fmt(scatter.max_abs_error) << ", rmse " << fmt(scatter.rmse) << "\n";
  out << "x_estimate,y_exact,pair_i,pair_j,samples\n";
  for (const auto& r : scatter.rows) {
    out << fmt(r.estimate) << ',' << fmt(r.exact) << ',' << r.pair.first << ',' << r.pair.second
        << ',' << r.samples << "\n";
  }
}

void write_resources_csv(std::ostream& out, const std::vector<ResourceRow>& rows) {
  const auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string{};
  };
  out << "n,k,new_cswap,new_ancilla,san_cswap,san_ancilla,"
         "new_cswap_measured,new_ancilla_measured,new_cswap_with_tests_measured,"
         "san_cswap_measured,san_ancilla_measured,"
         "printed_new_cswap_nk,printed_new_cswap_with_tests,printed_san_cswap_3n_minus_3,"
         "printed_new_ancilla,printed_formula_mismatch,precision_ratio\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.new_cswap << ',' << r.new_ancilla << ',' << r.san_cswap
        << ',' << r.san_ancilla << ',' << opt(r.new_cswap_measured) << ','
        << opt(r.new_ancilla_measured) << ',' << opt(r.new_cswap_with_tests_measured) << ','
        << opt(r.san_cswap_measured) << ',' << opt(r.san_ancilla_measured) << ','
        << r.printed_new_cswap << ',' << fmt(r.printed_new_cswap_with_tests) << ','
        << r.printed_san_cswap << ',' << r.printed_new_ancilla << ','
        << (r.printed_formula_mismatch ? "true" : "false") << ',' << fmt(r.precision_ratio) << "\n";
  }
}

void write_precision_csv(std::ostream& out, const std::vector<PrecisionModel>& rows) {
  out << "inputs,n,shots,m1_san,m2_new,ratio\n";
  for (const auto& p : rows) {
    out << p.requested_n << ',' << p.n << ',' << p.shots << ',' << fmt(p.m1) << ',' << fmt(p.m2)
        << ',' << fmt(p.ratio) << "\n";
  }
}

void write_replay_csv(std::ostream& out, const ReplayReport& report) {
  out << "# total_shots " << report.total_shots << ", flagged " << report.flagged_count() << "\n";
  out << "pair_i,pair_j,exact,estimate,samples,stderr,t0,t1,reference_exact,reference_estimate,"
         "deviation,flagged\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    const auto& e = row.estimate;
    const auto& t = report.tallies[i];
    out << e.pair.first << ',' << e.pair.second << ',' << fmt(e.exact) << ','
        << (e.estimate ? fmt(*e.estimate) : "unsampled") << ',' << e.samples << ','
        << (e.stderr_bound ? fmt(*e.stderr_bound) : "") << ',' << t.t0 << ',' << t.t1 << ',';
    if (row.reference) {
      out << fmt(row.reference->exact) << ','
          << (row.reference->estimate ? fmt(*row.reference->estimate) : "");
    } else {
      out << ',';
    }
    out << ',' << (row.deviation ? fmt(*row.deviation) : "") << ','
        << (row.flagged ? "true" : "false") << "\n";
  }
}

void write_qasm(std::ostream& out, const Circuit& circuit, const QasmOptions& options) {
  const auto q = [](Qubit i) { return "q[" + std::to_string(i) + "]"; };
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.qubit_count() << "];\n";
  if (!circuit.measured().empty()) out << "creg c[" << circuit.measured().size() << "];\n";

  if (options.prepare) {
    if (!options.layout) throw std::invalid_argument("state preparation needs the scheme layout");
    const auto& layout = *options.layout;
    if (options.prepare->width() != 1) {
      throw ConfigError("QASM state preparation is only emitted for single-qubit registers");
    }
    for (std::size_t p = 0; p < layout.n; ++p) {
      const auto& s = options.prepare->at_label(p + 1);
      const double theta = 2.0 * std::atan2(std::abs(s[1]), std::abs(s[0]));
      const double phi = std::arg(s[1]) - std::arg(s[0]);
      if (theta == 0.0) continue;
      out << "u3(" << fmt(theta) << ',' << fmt(phi) << ",0) " << q(layout.register_qubit(p, 0))
          << ";\n";
    }
  }

  for (const auto& g : circuit.gates()) {
    const auto& o = g.qubits;
    switch (g.kind) {
      case GateKind::H: out << "h " << q(o[0]) << ";\n"; break;
      case GateKind::X: out << "x " << q(o[0]) << ";\n"; break;
      case GateKind::Z: out << "z " << q(o[0]) << ";\n"; break;
      case GateKind::CNOT: out << "cx " << q(o[0]) << ',' << q(o[1]) << ";\n"; break;
      case GateKind::SWAP: out << "swap " << q(o[0]) << ',' << q(o[1]) << ";\n"; break;
      case GateKind::CCZ:
        out << "h " << q(o[2]) << ";\nccx " << q(o[0]) << ',' << q(o[1]) << ',' << q(o[2])
            << ";\nh " << q(o[2]) << ";\n";
        break;
      case GateKind::CSWAP:
        if (options.cswap == CswapStyle::Native) {
          out << "cswap " << q(o[0]) << ',' << q(o[1]) << ',' << q(o[2]) << ";\n";
        } else {
          out << "cx " << q(o[2]) << ',' << q(o[1]) << ";\nccx " << q(o[0]) << ',' << q(o[1]) << ','
              << q(o[2]) << ";\ncx " << q(o[2]) << ',' << q(o[1]) << ";\n";
        }
        break;
    }
  }
  const auto measured = circuit.measured();
  for (std::size_t j = 0; j < measured.size(); ++j) {
    out << "measure " << q(measured[j].qubit) << " -> c[" << j << "]; // " << measured[j].label
        << "\n";
  }
}

std::vector<ReferenceSwapTable> parse_reference_tables(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<ReferenceSwapTable> out;
  if (!doc.contains("tables") || !doc["tables"].is_array()) {
    throw DataError("tables: expected an array");
  }
  for (std::size_t i = 0; i < doc["tables"].size(); ++i) {
    const auto& t = doc["tables"][i];
    const std::string path = "tables[" + std::to_string(i) + "]";
    try {
      ReferenceSwapTable r;
      r.name = t.at("name").get<std::string>();
      r.scheme = parse_scheme(t.at("scheme").get<std::string>());
      r.n = t.at("n").get<std::size_t>();
      for (const auto& [bits, perm] : t.at("rows").items()) {
        r.rows.emplace_back(bits, perm.get<std::vector<std::size_t>>());
      }
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw DataError(path + ": " + e.what());
    } catch (const ConfigError& e) {
      throw DataError(path + ": " + e.what());
    }
  }
  return out;
}

std::vector<ReferenceSwapTable> load_reference_tables(const std::filesystem::path& path) {
  try {
    return parse_reference_tables(read_file(path));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string permutation_table_json(const BuiltScheme& built, const PermutationTable& table,
                                   const std::vector<ReferenceSwapTable>& references) {
  const auto& layout = built.layout;
  ordered_json doc;
  doc["scheme"] = std::string(scheme_name(layout.scheme));
  doc["n"] = layout.n;
  doc["ancillas"] = layout.ancilla_labels;
  doc["ancilla_roles"] = layout.ancilla_roles;
  ordered_json slots = ordered_json::array();
  for (const auto& s : layout.slots) slots.push_back({s.first + 1, s.second + 1});
  doc["slot_registers"] = slots;

  const auto slot_pairs_of = [&](std::span<const std::size_t> row) {
    ordered_json pairs = ordered_json::array();
    for (const auto& s : layout.slots) pairs.push_back({row[s.first], row[s.second]});
    return pairs;
  };

  ordered_json rows = ordered_json::array();
  for (std::uint64_t o = 0; o < table.row_count(); ++o) {
    const auto row = table.row(o);
    ordered_json r;
    r["outcome"] = table.outcome_bits(o);
    r["permutation"] = std::vector<std::size_t>(row.begin(), row.end());
    r["slots"] = slot_pairs_of(row);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);

  ordered_json coverage = ordered_json::object();
  for (const auto& [pair, entries] : pair_coverage_map(table, layout)) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      list.push_back({{"outcome", table.outcome_bits(e.outcome)}, {"slot", e.slot + 1}});
    }
    coverage[std::to_string(pair.first) + "," + std::to_string(pair.second)] = std::move(list);
  }
  doc["coverage"] = std::move(coverage);

  ordered_json audits = ordered_json::array();
  for (const auto& ref : references) {
    if (ref.scheme != layout.scheme || ref.n != layout.n) continue;
    ordered_json audit;
    audit["reference"] = ref.name;
    std::size_t matching = 0;
    ordered_json mismatches = ordered_json::array();
    std::multiset<std::pair<std::size_t, std::size_t>> ref_pairs, derived_pairs;
    for (const auto& [bits, perm] : ref.rows) {
      if (bits.size() != table.ancilla_count()) {
        throw DataError("reference row '" + bits + "' has the wrong number of ancilla bits");
      }
      const auto derived = table.row(parse_outcome_bits(bits));
      const bool same = std::equal(derived.begin(), derived.end(), perm.begin(), perm.end());
      if (same) {
        ++matching;
      } else {
        mismatches.push_back({{"outcome", bits},
                              {"reference", perm},
                              {"derived", std::vector<std::size_t>(derived.begin(), derived.end())}});
      }
      for (const auto& s : layout.slots) {
        if (perm.size() == layout.n) ref_pairs.insert(make_pair_key(perm[s.first], perm[s.second]));
        derived_pairs.insert(make_pair_key(derived[s.first], derived[s.second]));
      }
    }
    audit["rows_compared"] = ref.rows.size();
    audit["rows_matching"] = matching;
    audit["slot_pair_multiset_equal"] = ref_pairs == derived_pairs;
    audit["mismatches"] = std::move(mismatches);
    audits.push_back(std::move(audit));
  }
  doc["audit"] = std::move(audits);
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace multiswap
