// qihc: uniform-alphabet code tables, state inspection, container
// encode/decode, verification sweeps and op-count benchmarks.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qihc/commands.hpp"
#include "qihc/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Prefix-code toolkit: Huffman, ket-bra state encoder, direct-mapped codes"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  bool json = false;
  auto* table = app.add_subcommand("table", "Print the direct-mapped code of every symbol");
  table->add_option("--n", n, "Alphabet size")->required();
  table->add_flag("--json", json, "Emit one JSON object");

  auto* params = app.add_subcommand("params", "Print n, lower, upper, diff as JSON");
  params->add_option("--n", n, "Alphabet size")->required();

  bool dense = false;
  auto* state = app.add_subcommand("state", "Print the encoder state registers");
  state->add_option("--n", n, "Alphabet size")->required();
  state->add_flag("--dense", dense, "Print full 0/1 grids");

  std::uint64_t max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run the uniform-alphabet invariant sweep");
  verify->add_option("--max-n", max_n, "Largest alphabet size to check")->required();

  std::string n_list;
  std::string bench_mode = "all";
  std::optional<std::string> csv;
  auto* bench = app.add_subcommand("bench", "Count operations and check complexity bounds");
  bench->add_option("--n-list", n_list, "Comma-separated alphabet sizes")->required();
  bench->add_option("--mode", bench_mode, "all|tree|direct|qstate");
  bench->add_option("--csv", csv, "Write per-counter wall times as CSV");

  std::string freq_path;
  auto* entropy = app.add_subcommand("entropy", "Entropy and Huffman expected length");
  entropy->add_option("--freq", freq_path, "File of 'symbol count' lines")->required();

  qihc::EncodeOptions enc;
  int sym_width = 1;
  auto* encode = app.add_subcommand("encode", "Compress a file into a container");
  encode->add_option("--mode", enc.mode, "direct|tree|qstate")->required();
  encode->add_option("--n", enc.n, "Alphabet size (direct, qstate)");
  encode->add_option("--in", enc.in_path)->required();
  encode->add_option("--out", enc.out_path)->required();
  encode->add_option("--sym-width", sym_width, "Raw symbol width in bytes")
      ->check(CLI::IsMember({1, 2, 4}));

  std::string dec_in, dec_out;
  auto* decode = app.add_subcommand("decode", "Restore a file from a container");
  decode->add_option("--in", dec_in)->required();
  decode->add_option("--out", dec_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    auto& out = std::cout;
    if (*table) return qihc::cmd_table(n, json, out);
    if (*params) return qihc::cmd_params(n, out);
    if (*state) return qihc::cmd_state(n, dense, out);
    if (*verify) return qihc::cmd_verify(max_n, out);
    if (*bench) return qihc::cmd_bench(qihc::parse_n_list(n_list), bench_mode, csv, out);
    if (*entropy) return qihc::cmd_entropy(freq_path, out);
    if (*encode) {
      enc.symbol_width = static_cast<std::uint8_t>(sym_width);
      return qihc::cmd_encode(enc, out);
    }
    if (*decode) return qihc::cmd_decode(dec_in, dec_out, out);
  } catch (const qihc::Error& e) {
    std::cerr << "error: " << qihc::to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == qihc::ErrorKind::usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
