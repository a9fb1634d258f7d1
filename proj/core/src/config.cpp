#include "qida/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qida {

HeisenbergSpec parse_heisenberg_spec(const std::string& text) {
  std::istringstream in(text);
  std::string topo, n_str, j_str;
  if (!std::getline(in, topo, ':') || !std::getline(in, n_str, ':') ||
      !std::getline(in, j_str))
    throw std::invalid_argument("heisenberg spec: expected topology:n:coupling, got \"" +
                                text + "\"");
  HeisenbergSpec spec;
  if (topo == "chain") spec.topology = LatticeTopology::Chain;
  else if (topo == "ring") spec.topology = LatticeTopology::Ring;
  else throw std::invalid_argument("heisenberg spec: unknown topology \"" + topo + "\"");
  try {
    spec.n_qubits = std::stoi(n_str);
    spec.coupling = std::stod(j_str);
  } catch (const std::exception&) {
    throw std::invalid_argument("heisenberg spec: non-numeric field in \"" + text + "\"");
  }
  if (spec.n_qubits < 2)
    throw std::invalid_argument("heisenberg spec: need at least 2 qubits");
  return spec;
}

std::string ansatz_label(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::QidaMax: return "qida-max";
    case AnsatzKind::QidaEmp: return "qida-emp";
    case AnsatzKind::Hea: return "hea";
  }
  return "?";
}

AnsatzKind ansatz_from_label(const std::string& label) {
  if (label == "qida-max") return AnsatzKind::QidaMax;
  if (label == "qida-emp") return AnsatzKind::QidaEmp;
  if (label == "hea") return AnsatzKind::Hea;
  throw std::invalid_argument("unknown ansatz \"" + label +
                              "\" (expected qida-max, qida-emp or hea)");
}

void ExperimentConfig::set_qmi_source(const std::string& spec) {
  if (spec == "exact") {
    qmi_source = QmiSource::ExactGroundState;
    qmi_path.clear();
  } else if (spec.rfind("dets:", 0) == 0) {
    qmi_source = QmiSource::DeterminantFile;
    qmi_path = spec.substr(5);
  } else if (spec.rfind("csv:", 0) == 0) {
    qmi_source = QmiSource::CsvFile;
    qmi_path = spec.substr(4);
  } else {
    throw std::invalid_argument("qmi source: expected exact, dets:<path> or csv:<path>, got \"" +
                                spec + "\"");
  }
}

void ExperimentConfig::validate() const {
  if (fcidump.has_value() == heisenberg.has_value())
    throw std::invalid_argument("config: exactly one hamiltonian source (fcidump or "
                                "heisenberg) must be set");
  if (qmi_source != QmiSource::ExactGroundState && qmi_path.empty())
    throw std::invalid_argument("config: qmi source needs a path");
  if (n_runs < 1) throw std::invalid_argument("config: n_runs must be >= 1");
  if (hea_depth < 1) throw std::invalid_argument("config: hea_depth must be >= 1");
  if (max_iterations < 1) throw std::invalid_argument("config: max_iterations must be >= 1");
  if (gradient_tolerance <= 0.0)
    throw std::invalid_argument("config: gradient_tolerance must be positive");
  if (det_cutoff < 0.0) throw std::invalid_argument("config: det_cutoff must be >= 0");
  if (max_determinants == 0)
    throw std::invalid_argument("config: max_determinants must be positive");
  if (out.empty()) throw std::invalid_argument("config: output directory must be set");
  for (std::size_t i = 1; i < finesse_ratios.size(); ++i)
    if (finesse_ratios[i] >= finesse_ratios[i - 1])
      throw std::invalid_argument("config: finesse ratios must be strictly decreasing");
}

namespace toml {

namespace {

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// removes a trailing comment that is not inside a string literal
std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

Value parse_scalar(const std::string& text, int line_no) {
  Value v;
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
    v.kind = Value::Kind::String;
    v.string_value = text.substr(1, text.size() - 2);
    return v;
  }
  if (text == "true" || text == "false") {
    v.kind = Value::Kind::Boolean;
    v.bool_value = text == "true";
    return v;
  }
  try {
    std::size_t used = 0;
    v.number_value = std::stod(text, &used);
    if (used == text.size()) {
      v.kind = Value::Kind::Number;
      return v;
    }
  } catch (const std::exception&) {
  }
  throw std::runtime_error("config: line " + std::to_string(line_no) +
                           ": cannot parse value \"" + text + "\"");
}

Value parse_value(const std::string& text, int line_no) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']')
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": unterminated array");
    Value v;
    v.kind = Value::Kind::Array;
    const std::string body = text.substr(1, text.size() - 2);
    std::string item;
    bool in_string = false;
    for (char c : body) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        const std::string t = strip(item);
        if (!t.empty()) v.array_value.push_back(parse_scalar(t, line_no));
        item.clear();
      } else {
        item += c;
      }
    }
    const std::string t = strip(item);
    if (!t.empty()) v.array_value.push_back(parse_scalar(t, line_no));
    return v;
  }
  return parse_scalar(text, line_no);
}

}  // namespace

std::vector<std::pair<std::string, Value>> parse(std::istream& in) {
  std::vector<std::pair<std::string, Value>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = strip(strip_comment(line));
    if (content.empty()) continue;
    if (content.front() == '[')
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": tables are not supported; use flat keys");
    const auto eq = content.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": expected key = value");
    const std::string key = strip(content.substr(0, eq));
    const std::string value = strip(content.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": empty key or value");
    entries.emplace_back(key, parse_value(value, line_no));
  }
  return entries;
}

}  // namespace toml

namespace {

double expect_number(const toml::Value& v, const std::string& key) {
  if (v.kind != toml::Value::Kind::Number)
    throw std::runtime_error("config: key \"" + key + "\" must be a number");
  return v.number_value;
}

std::string expect_string(const toml::Value& v, const std::string& key) {
  if (v.kind != toml::Value::Kind::String)
    throw std::runtime_error("config: key \"" + key + "\" must be a string");
  return v.string_value;
}

}  // namespace

ExperimentConfig load_config(std::istream& in) {
  ExperimentConfig config;
  for (const auto& [key, value] : toml::parse(in)) {
    if (key == "fcidump") {
      config.fcidump = expect_string(value, key);
    } else if (key == "heisenberg") {
      config.heisenberg = parse_heisenberg_spec(expect_string(value, key));
    } else if (key == "qmi") {
      config.set_qmi_source(expect_string(value, key));
    } else if (key == "plan") {
      config.plan = expect_string(value, key);
    } else if (key == "finesse_ratios") {
      if (value.kind != toml::Value::Kind::Array)
        throw std::runtime_error("config: finesse_ratios must be an array");
      config.finesse_ratios.clear();
      for (const auto& item : value.array_value)
        config.finesse_ratios.push_back(expect_number(item, key));
    } else if (key == "criterion") {
      config.criterion = criterion_from_name(expect_string(value, key));
    } else if (key == "hea_depth") {
      config.hea_depth = static_cast<int>(expect_number(value, key));
    } else if (key == "n_runs") {
      config.n_runs = static_cast<int>(expect_number(value, key));
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(expect_number(value, key));
    } else if (key == "out") {
      config.out = expect_string(value, key);
    } else if (key == "ansatz") {
      if (value.kind != toml::Value::Kind::Array)
        throw std::runtime_error("config: ansatz must be an array of labels");
      config.ansatz.clear();
      for (const auto& item : value.array_value)
        config.ansatz.push_back(ansatz_from_label(expect_string(item, key)));
    } else if (key == "det_cutoff") {
      config.det_cutoff = expect_number(value, key);
    } else if (key == "max_determinants") {
      config.max_determinants = static_cast<std::size_t>(expect_number(value, key));
    } else if (key == "gradient_tolerance") {
      config.gradient_tolerance = expect_number(value, key);
    } else if (key == "max_iterations") {
      config.max_iterations = static_cast<int>(expect_number(value, key));
    } else if (key == "threads") {
      config.threads = static_cast<int>(expect_number(value, key));
    } else {
      throw std::runtime_error("config: unknown key \"" + key + "\"");
    }
  }
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  return load_config(in);
}

}  // namespace qida
