#include "chatelet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chatelet/api.hpp"
#include "chatelet/errors.hpp"

namespace chatelet {

namespace {

using nlohmann::json;

std::string pair_str(const json& g) {
  return "(" + std::to_string(g.at(0).get<int>()) + "," + std::to_string(g.at(1).get<int>()) + ")";
}

std::string subgroup_str(const json& arr) {
  std::string out = "{";
  for (size_t i = 0; i < arr.size(); ++i) out += (i ? ", " : "") + pair_str(arr.at(i));
  return out + "}";
}

void print_classification(std::ostream& out, const json& j, const std::string& indent = "") {
  out << indent << "group:     " << j.at("group").get<std::string>() << "\n";
  out << indent << "case:      " << j.at("case").get<std::string>() << "\n";
  out << indent << "reduction: "
      << (j.at("reduction").is_null() ? "-" : j.at("reduction").get<std::string>()) << "\n";
  out << indent << "image:     "
      << (j.at("image").is_null() ? "-" : subgroup_str(j.at("image"))) << "\n";
  const json& log = j.at("normalization_log");
  if (!log.empty()) {
    out << indent << "normalization:\n";
    for (const json& line : log) out << indent << "  - " << line.get<std::string>() << "\n";
  }
}

std::string read_matrix_arg(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const json& j, bool as_json) {
  if (as_json) out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow groups of degree-0 zero-cycles on Chatelet surfaces over p-adic fields"};
  app.name("chatelet");
  app.require_subcommand(1);

  std::string field, d, e1, e2, x, ext, a, c, matrix_path;
  long qmax_lemmas = 13;
  long qmax_verify = 49;
  std::optional<long> depth;
  long depth_raw = -1;
  bool as_json = false;

  auto add_instance_opts = [&](CLI::App* sc) {
    sc->add_option("--field", field, "base field descriptor (Qp:p, Unram:p^f, Eis:p:[c0,...])")
        ->required();
    sc->add_option("--d", d, "quadratic twist d")->required();
    sc->add_option("--e1", e1, "first root e1")->required();
    sc->add_option("--e2", e2, "second root e2")->required();
  };
  auto add_json_flag = [&](CLI::App* sc) {
    sc->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "closed-form classification");
  add_instance_opts(classify_cmd);
  add_json_flag(classify_cmd);

  CLI::App* theta_cmd = app.add_subcommand("theta", "evaluate theta at one x (no normalization)");
  add_instance_opts(theta_cmd);
  theta_cmd->add_option("--x", x, "x coordinate, or 'inf'")->required();
  add_json_flag(theta_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force theta image");
  add_instance_opts(oracle_cmd);
  oracle_cmd->add_option("--depth", depth_raw, "digit depth override (default: adaptive)");
  add_json_flag(oracle_cmd);

  CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "residue-field lemma sweep");
  lemmas_cmd->add_option("--qmax", qmax_lemmas, "largest prime power to sweep (default 13)");
  add_json_flag(lemmas_cmd);

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "behavior under base change");
  add_instance_opts(restrict_cmd);
  restrict_cmd->add_option("--ext", ext, "extension field descriptor")->required();
  add_json_flag(restrict_cmd);

  CLI::App* delpezzo_cmd =
      app.add_subcommand("delpezzo", "degree-4 del Pezzo parameters to surface roots");
  delpezzo_cmd->add_option("--field", field, "base field descriptor")->required();
  delpezzo_cmd->add_option("--d", d, "quadratic twist d")->required();
  delpezzo_cmd->add_option("--a", a, "parameter a")->required();
  delpezzo_cmd->add_option("--c", c, "parameter c")->required();
  add_json_flag(delpezzo_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "full verification suite");
  verify_cmd->add_option("--matrix", matrix_path, "instance matrix JSON file, or - for stdin");
  verify_cmd->add_option("--qmax", qmax_verify, "residue sweep bound (default 49)");
  verify_cmd->add_option("--depth", depth_raw, "enumeration depth override");
  add_json_flag(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (depth_raw >= 0) depth = depth_raw;

  try {
    if (classify_cmd->parsed()) {
      json j = api_classify(field, d, e1, e2);
      emit(out, j, as_json);
      if (!as_json) print_classification(out, j);
      return 0;
    }

    if (theta_cmd->parsed()) {
      json j = api_theta(field, d, e1, e2, x);
      emit(out, j, as_json);
      if (!as_json) {
        out << "x: " << j.at("x").get<std::string>() << "\n";
        if (j.at("member").get<bool>())
          out << "theta: " << pair_str(j.at("theta")) << "\n";
        else
          out << "not in the fiber image\n";
      }
      return 0;
    }

    if (oracle_cmd->parsed()) {
      json j = api_oracle(field, d, e1, e2, depth);
      emit(out, j, as_json);
      if (!as_json) {
        out << "normalized: d=" << j.at("d").get<std::string>() << " e1="
            << j.at("e1").get<std::string>() << " e2=" << j.at("e2").get<std::string>() << "\n";
        out << "depth: " << j.at("depth").get<long>() << "\n";
        out << "members enumerated: " << j.at("members").get<long>() << "\n";
        out << "image: " << subgroup_str(j.at("image")) << " (cardinality "
            << j.at("cardinality").get<int>() << ")\n";
        out << "classified: " << j.at("case").get<std::string>() << " / "
            << j.at("group").get<std::string>() << "\n";
        out << "match: " << (j.at("match").get<bool>() ? "yes" : "NO") << "\n";
      }
      return 0;
    }

    if (lemmas_cmd->parsed()) {
      json j = api_lemmas(qmax_lemmas);
      emit(out, j, as_json);
      if (!as_json) {
        // aggregate per (lemma, q); failures listed individually
        std::map<std::pair<std::string, long>, std::pair<long, long>> agg;
        std::vector<std::string> failing;
        for (const json& rec : j.at("records")) {
          auto key = std::make_pair(rec.at("lemma").get<std::string>(), rec.at("q").get<long>());
          if (rec.at("ok").get<bool>()) {
            agg[key].first += 1;
          } else {
            agg[key].second += 1;
            if (failing.size() < 20)
              failing.push_back(rec.at("lemma").get<std::string>() + " q=" +
                                std::to_string(rec.at("q").get<long>()) + " params=" +
                                rec.at("params").dump());
          }
        }
        for (const auto& [key, counts] : agg)
          out << key.first << " q=" << key.second << ": " << counts.first << " pass, "
              << counts.second << " fail\n";
        for (const std::string& line : failing) out << "FAIL " << line << "\n";
        out << (j.at("ok").get<bool>() ? "all records pass" : "failing records present") << "\n";
      }
      return 0;
    }

    if (restrict_cmd->parsed()) {
      json j = api_restrict(field, d, e1, e2, ext);
      emit(out, j, as_json);
      if (!as_json) {
        out << "base:\n";
        print_classification(out, j.at("base"), "  ");
        out << "extension: " << j.at("ext_field").get<std::string>() << " (degree "
            << j.at("degree").get<long>() << ", " << j.at("step").get<std::string>() << ")\n";
        out << "restriction map: " << j.at("map").get<std::string>() << "\n";
        out << "over the extension:\n";
        print_classification(out, j.at("ext"), "  ");
      }
      return 0;
    }

    if (delpezzo_cmd->parsed()) {
      json j = api_delpezzo(field, d, a, c);
      emit(out, j, as_json);
      if (!as_json) {
        out << "e1 = " << j.at("e1").get<std::string>() << "\n";
        out << "e2 = " << j.at("e2").get<std::string>() << "\n";
        print_classification(out, j.at("classification"));
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::optional<std::string> matrix_text;
      if (!matrix_path.empty()) matrix_text = read_matrix_arg(matrix_path);
      json j = api_verify(matrix_text, qmax_verify, depth);
      emit(out, j, as_json);
      if (!as_json) {
        for (const json& cj : j.at("checks")) {
          out << cj.at("name").get<std::string>() << ": " << cj.at("passed").get<long>()
              << " passed, " << cj.at("failed").get<long>() << " failed\n";
          for (const json& line : cj.at("failures"))
            out << "  FAIL " << line.get<std::string>() << "\n";
        }
        out << "total: " << j.at("counts").at("passed").get<long>() << " passed, "
            << j.at("counts").at("failed").get<long>() << " failed\n";
      }
      return j.at("ok").get<bool>() ? 0 : 3;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace chatelet
