#include "qihc/commands.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iterator>
#include "json.hpp"
#include <sstream>

#include "qihc/bench.hpp"
#include "qihc/container.hpp"
#include "qihc/direct_map.hpp"
#include "qihc/errors.hpp"
#include "qihc/qstate.hpp"
#include "qihc/verify.hpp"

namespace qihc {

namespace {

void require_table_range(std::uint64_t n) {
  if (n < 2 || n > kMaxMaterializedAlphabet) {
    throw Error(ErrorKind::usage, "--n must be in [2, 2^20]");
  }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::io, "write to '" + path + "' failed");
}

nlohmann::ordered_json params_json(const CodeParams& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["lower"] = p.lower;
  j["upper"] = p.upper;
  j["diff"] = p.diff;
  return j;
}

void print_register(std::ostream& out, const char* name, const SparseZeroOneMatrix& m) {
  out << name << ':';
  for (const auto& c : m.ones()) out << " (" << c.row << ',' << c.col << ')';
  out << '\n';
}

void print_dense(std::ostream& out, const char* name, const SparseZeroOneMatrix& m) {
  const auto grid = densify(m);
  out << name << ' ' << m.rows() << 'x' << m.cols() << ":\n";
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      out << (c == 0 ? "" : " ") << static_cast<int>(grid(r, c));
    }
    out << '\n';
  }
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorKind::usage, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

int cmd_table(std::uint64_t n, bool json, std::ostream& out) {
  require_table_range(n);
  const auto p = code_params(n);
  const auto book = direct_codebook(n);
  if (json) {
    auto j = params_json(p);
    j["codes"] = nlohmann::ordered_json::array();
    for (const auto& e : book.entries()) j["codes"].push_back(e.code.to_string());
    out << j.dump() << '\n';
    return 0;
  }
  out << "# n=" << p.n << "\tlower=" << p.lower << "\tupper=" << p.upper << "\tdiff=" << p.diff
      << '\n';
  for (const auto& e : book.entries()) out << e.symbol << '\t' << e.code.to_string() << '\n';
  return 0;
}

int cmd_params(std::uint64_t n, std::ostream& out) {
  out << params_json(code_params(n)).dump() << '\n';
  return 0;
}

int cmd_state(std::uint64_t n, bool dense, std::ostream& out) {
  const auto p = code_params(n);
  if (dense && p.upper > 12) {
    throw Error(ErrorKind::too_large, "--dense requires 2^upper <= 4096");
  }
  const auto s = build_state(n);
  out << "# n=" << p.n << "\tlower=" << p.lower << "\tupper=" << p.upper << "\tdiff=" << p.diff
      << '\n';
  if (dense) {
    print_dense(out, "register1", s.state1);
    if (p.diff > 0) print_dense(out, "register2", s.state2);
  } else {
    print_register(out, "register1", s.state1);
    if (p.diff > 0) print_register(out, "register2", s.state2);
  }
  return 0;
}

int cmd_verify(std::uint64_t max_n, std::ostream& out) {
  const auto report = verify_range(max_n);
  for (const auto& [n, what] : report.failures) out << "FAIL\tn=" << n << '\t' << what << '\n';
  out << (report.ok() ? "ok" : "failed") << "\tn=" << report.n_range.first << ".."
      << report.n_range.second << "\tfailures=" << report.failures.size() << "\tchecked=";
  for (std::size_t i = 0; i < report.checked_properties.size(); ++i) {
    out << (i ? "," : "") << report.checked_properties[i];
  }
  out << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_bench(const std::vector<std::uint64_t>& ns, const std::string& mode,
              const std::optional<std::string>& csv_path, std::ostream& out) {
  if (ns.empty()) throw Error(ErrorKind::usage, "--n-list is empty");
  for (auto n : ns) {
    if (n < 2) throw Error(ErrorKind::usage, "every n in --n-list must be at least 2");
  }
  const auto result = run_bench(ns, parse_bench_modes(mode));
  out << "n\tmode\tcounter\tvalue\n";
  for (const auto& r : result.rows) {
    out << r.n << '\t' << r.mode << '\t' << r.counter << '\t' << r.value << '\n';
  }
  if (csv_path) {
    std::ofstream csv(*csv_path, std::ios::trunc);
    if (!csv) throw Error(ErrorKind::io, "cannot open '" + *csv_path + "' for writing");
    write_bench_csv(csv, result);
  }
  for (const auto& v : result.violations) out << "VIOLATION\t" << v << '\n';
  return result.ok() ? 0 : 1;
}

SymbolDistribution parse_frequency_table(std::istream& in) {
  struct Raw {
    Symbol symbol;
    std::uint64_t mantissa;
    unsigned scale;  // decimal places
  };
  std::vector<Raw> raw;
  unsigned max_scale = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string sym_text, count_text, extra;
    if (!(fields >> sym_text >> count_text) || (fields >> extra)) {
      throw Error(ErrorKind::format, "line " + std::to_string(line_no) + ": expected 'symbol count'");
    }
    Raw r{parse_u64(sym_text, "symbol"), 0, 0};
    const auto dot = count_text.find('.');
    std::string digits = count_text;
    if (dot != std::string::npos) {
      digits = count_text.substr(0, dot) + count_text.substr(dot + 1);
      r.scale = static_cast<unsigned>(count_text.size() - dot - 1);
      if (digits.empty()) digits = "x";
    }
    if (r.scale > 18 || digits.size() > 19) {
      throw Error(ErrorKind::format, "line " + std::to_string(line_no) + ": count too precise");
    }
    try {
      r.mantissa = parse_u64(digits, "count");
    } catch (const Error&) {
      throw Error(ErrorKind::format, "line " + std::to_string(line_no) + ": malformed count");
    }
    max_scale = std::max(max_scale, r.scale);
    raw.push_back(r);
  }
  std::vector<SymbolFrequency> entries;
  entries.reserve(raw.size());
  for (const auto& r : raw) {
    std::uint64_t f = r.mantissa;
    for (unsigned i = r.scale; i < max_scale; ++i) {
      if (f > UINT64_MAX / 10) throw Error(ErrorKind::overflow, "scaled count exceeds 64 bits");
      f *= 10;
    }
    entries.push_back({r.symbol, f});
  }
  if (entries.empty()) throw Error(ErrorKind::invalid_distribution, "frequency table is empty");
  return SymbolDistribution(std::move(entries));
}

int cmd_entropy(const std::string& freq_path, std::ostream& out) {
  std::ifstream in(freq_path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + freq_path + "' for reading");
  const auto dist = parse_frequency_table(in);
  const double h = entropy(dist);
  const double l = expected_length(dist, huffman_codebook(dist));
  out << std::fixed << std::setprecision(6) << "entropy\t" << h << "\nexpected_length\t" << l
      << "\nredundancy\t" << (l - h) << '\n';
  return 0;
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_u64(std::string_view(text).substr(start, end - start), "n"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_encode(const EncodeOptions& opts, std::ostream& out) {
  const auto input = read_file(opts.in_path);
  std::vector<std::uint8_t> container;
  std::uint64_t symbol_count = 0;
  std::uint64_t code_bits = 0;
  if (opts.mode == "tree") {
    container = compress_bytes(input);
    symbol_count = input.size();
    const auto lengths = parse_header(container).header.lengths;
    for (auto b : input) code_bits += lengths[b];
  } else if (opts.mode == "direct" || opts.mode == "qstate") {
    if (!opts.n) throw Error(ErrorKind::usage, "--n is required for mode " + opts.mode);
    if (*opts.n < 2 || *opts.n > UINT32_MAX) {
      throw Error(ErrorKind::usage, "--n must be in [2, 2^32 - 1]");
    }
    const auto symbols = unpack_symbols(input, opts.symbol_width);
    const auto encoder = opts.mode == "direct" ? UniformEncoder::direct : UniformEncoder::qstate;
    container = compress_uniform(static_cast<std::uint32_t>(*opts.n), symbols, opts.symbol_width,
                                 encoder);
    symbol_count = symbols.size();
    const auto p = code_params(*opts.n);
    for (auto sym : symbols) code_bits += sym <= p.last_short_symbol() ? p.lower : p.upper;
  } else {
    throw Error(ErrorKind::usage, "unknown mode '" + opts.mode + "'");
  }
  write_file(opts.out_path, container);

  const double bits_per_symbol =
      symbol_count == 0 ? 0.0
                        : static_cast<double>(code_bits) / static_cast<double>(symbol_count);
  out << "input_bytes=" << input.size() << "\toutput_bytes=" << container.size()
      << "\tsymbols=" << symbol_count << "\tbits_per_symbol=" << std::fixed << std::setprecision(6)
      << bits_per_symbol << '\n';
  return 0;
}

int cmd_decode(const std::string& in_path, const std::string& out_path, std::ostream& out) {
  const auto container = read_file(in_path);
  const auto decoded = decompress(container);
  std::vector<std::uint8_t> bytes;
  if (decoded.header.mode == ContainerMode::uniform) {
    bytes = pack_symbols(decoded.symbols, decoded.header.symbol_width);
  } else {
    bytes.assign(decoded.symbols.begin(), decoded.symbols.end());
  }
  write_file(out_path, bytes);
  out << "input_bytes=" << container.size() << "\toutput_bytes=" << bytes.size()
      << "\tsymbols=" << decoded.symbols.size() << '\n';
  return 0;
}

}  // namespace qihc
