#include <CLI11.hpp>
#include <json.hpp>

#include <equiquad/corrections.hpp>
#include <equiquad/quadrature.hpp>
#include <equiquad/rational.hpp>
#include <equiquad/rules.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace equiquad;

namespace {

enum class Format { exact, json_fmt, csv };

struct OutputOptions {
  Format format = Format::exact;
  int digits = 17;
};

std::string fmt_double(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string join_rationals(const std::vector<Rational> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ' ';
    out += values[i].str();
  }
  return out;
}

json rationals_to_json(const std::vector<Rational> &values) {
  json arr = json::array();
  for (const Rational &v : values)
    arr.push_back(v.str());
  return arr;
}

json weight_vector_to_json(const WeightVector &wv) {
  json obj;
  obj["alpha"] = wv.spec.alpha.str();
  obj["beta"] = wv.spec.beta.str();
  obj["m_left"] = wv.spec.m_left;
  obj["m_right"] = wv.spec.m_right;
  obj["n"] = wv.spec.n;
  obj["lo"] = wv.lo;
  obj["weights"] = rationals_to_json(wv.weights);
  return obj;
}

void print_weight_vector(const WeightVector &wv, const OutputOptions &out,
                         const std::string &name = {}) {
  switch (out.format) {
  case Format::exact:
    if (!name.empty()) {
      std::cout << "rule: " << name << "\n";
      std::cout << "spec: alpha=" << wv.spec.alpha.str()
                << " beta=" << wv.spec.beta.str() << " m_left=" << wv.spec.m_left
                << " m_right=" << wv.spec.m_right << " n=" << wv.spec.n << "\n";
    }
    std::cout << "indices " << wv.lo << ".." << wv.hi() << "\n";
    std::cout << join_rationals(wv.weights) << "\n";
    break;
  case Format::json_fmt: {
    json obj = weight_vector_to_json(wv);
    if (!name.empty())
      obj["name"] = name;
    std::cout << obj.dump(2) << "\n";
    break;
  }
  case Format::csv:
    std::cout << "index,weight\n";
    for (int i = wv.lo; i <= wv.hi(); ++i)
      std::cout << i << "," << wv.at(i).str() << "\n";
    break;
  }
}

// ---- builtin integrands -------------------------------------------------

struct Integrand {
  std::function<double(double)> fn;
  std::string name;
};

Integrand parse_builtin(const std::string &text) {
  if (text == "exp")
    return {[](double t) { return std::exp(t); }, text};
  if (text == "sin")
    return {[](double t) { return std::sin(t); }, text};
  if (text.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    std::stringstream ss(text.substr(5));
    std::string piece;
    while (std::getline(ss, piece, ','))
      coeffs.push_back(parse_rational(piece).to_double());
    if (coeffs.empty())
      throw std::invalid_argument("poly: needs at least one coefficient");
    return {[coeffs](double t) {
              double acc = 0;
              for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                acc = acc * t + *it;
              return acc;
            },
            text};
  }
  throw std::invalid_argument("unknown builtin integrand \"" + text +
                              "\" (expected poly:c0,c1,..., exp, or sin)");
}

std::vector<double> read_samples(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open sample file \"" + path + "\"");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    // CSV input: take the first column
    const std::string field = line.substr(0, line.find(','));
    std::size_t consumed = 0;
    const double v = std::stod(field, &consumed);
    while (consumed < field.size() &&
           std::isspace(static_cast<unsigned char>(field[consumed])))
      ++consumed;
    if (consumed != field.size())
      throw std::invalid_argument("bad ordinate line: \"" + line + "\"");
    values.push_back(v);
  }
  if (values.empty())
    throw std::invalid_argument("sample file \"" + path + "\" has no ordinates");
  return values;
}

std::pair<double, double> parse_limits(const std::string &text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("limits must be \"a,b\"");
  const double a = std::stod(text.substr(0, comma));
  const double b = std::stod(text.substr(comma + 1));
  return {a, b};
}

// ---- subcommand implementations -----------------------------------------

void run_corrections(const std::string &alpha_text, int m, bool show_b,
                     const OutputOptions &out) {
  const CorrectionSet set = correction_set(parse_rational(alpha_text), m);
  switch (out.format) {
  case Format::exact:
    if (show_b) {
      std::cout << "c: " << join_rationals(set.c) << "\n";
      std::cout << "b: " << join_rationals(set.b) << "\n";
    } else {
      std::cout << join_rationals(set.c) << "\n";
    }
    break;
  case Format::json_fmt: {
    json obj;
    obj["alpha"] = set.alpha.str();
    obj["m"] = set.degree;
    obj["c"] = rationals_to_json(set.c);
    obj["b"] = rationals_to_json(set.b);
    std::cout << obj.dump(2) << "\n";
    break;
  }
  case Format::csv:
    std::cout << (show_b ? "i,c,b\n" : "i,c\n");
    for (int i = 0; i <= set.degree; ++i) {
      std::cout << i << "," << set.c[i].str();
      if (show_b)
        std::cout << "," << set.b[i].str();
      std::cout << "\n";
    }
    break;
  }
}

WeightVector catalog_rule(const std::string &name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string piece;
  while (std::getline(ss, piece, ':'))
    parts.push_back(piece);
  if (parts.empty())
    throw std::invalid_argument("empty rule name");

  const auto arg = [&](std::size_t i) {
    if (i >= parts.size())
      throw std::invalid_argument("rule \"" + name + "\" is missing a parameter");
    return std::stoi(parts[i]);
  };
  const auto expect_parts = [&](std::size_t count) {
    if (parts.size() != count)
      throw std::invalid_argument("rule \"" + name + "\" has the wrong number of parameters");
  };

  const std::string &kind = parts[0];
  if (kind == "trapezoid") {
    expect_parts(1);
    return newton_cotes_closed(2);
  }
  if (kind == "simpson13") {
    expect_parts(1);
    return newton_cotes_closed(3);
  }
  if (kind == "simpson38") {
    expect_parts(1);
    return newton_cotes_closed(4);
  }
  if (kind == "boole") {
    expect_parts(1);
    return newton_cotes_closed(5);
  }
  if (kind == "nc-closed") {
    expect_parts(2);
    return newton_cotes_closed(arg(1));
  }
  if (kind == "nc-open") {
    expect_parts(2);
    return newton_cotes_open(arg(1));
  }
  if (kind == "gregory") {
    expect_parts(3);
    return gregory_rule(arg(1), arg(2));
  }
  if (kind == "lacroix") {
    expect_parts(2);
    const int n = arg(1);
    if (n < 5)
      throw std::invalid_argument("lacroix needs n >= 5 (six or more points)");
    return gregory_rule(2, n);
  }
  if (kind == "ab") {
    expect_parts(3);
    if (parts[2] == "fwd")
      return adams_bashforth(arg(1), Direction::forward);
    if (parts[2] == "bwd")
      return adams_bashforth(arg(1), Direction::backward);
    throw std::invalid_argument("ab direction must be fwd or bwd");
  }
  if (kind == "am") {
    expect_parts(2);
    return adams_moulton(arg(1));
  }
  if (kind == "ctrap") {
    expect_parts(2);
    return discretized_corrected_trapezoid(arg(1));
  }
  if (kind == "cmid") {
    expect_parts(2);
    return discretized_corrected_midpoint(arg(1));
  }
  throw std::invalid_argument(
      "unknown rule \"" + name +
      "\"; valid names: trapezoid, simpson13, simpson38, boole, nc-closed:k, "
      "nc-open:k, gregory:m:n, lacroix:n, ab:k:fwd, ab:k:bwd, am:k, ctrap:n, cmid:n");
}

void print_estimate(double value, const OutputOptions &out) {
  switch (out.format) {
  case Format::exact:
    std::cout << fmt_double(value, out.digits) << "\n";
    break;
  case Format::json_fmt: {
    json obj;
    obj["estimate"] = value;
    std::cout << obj.dump(2) << "\n";
    break;
  }
  case Format::csv:
    std::cout << "estimate\n" << fmt_double(value, out.digits) << "\n";
    break;
  }
}

void print_paired(const PairedEstimate &pair, const OutputOptions &out) {
  switch (out.format) {
  case Format::exact:
    std::cout << fmt_double(pair.estimate_low, out.digits) << " "
              << fmt_double(pair.estimate_high, out.digits) << " "
              << fmt_double(pair.difference, out.digits) << "\n";
    break;
  case Format::json_fmt: {
    json obj;
    obj["estimate_m"] = pair.estimate_low;
    obj["estimate_m_plus_1"] = pair.estimate_high;
    obj["difference"] = pair.difference;
    std::cout << obj.dump(2) << "\n";
    break;
  }
  case Format::csv:
    std::cout << "estimate_m,estimate_m_plus_1,difference\n"
              << fmt_double(pair.estimate_low, out.digits) << ","
              << fmt_double(pair.estimate_high, out.digits) << ","
              << fmt_double(pair.difference, out.digits) << "\n";
    break;
  }
}

void print_report(const ConvergenceReport &report, const OutputOptions &out) {
  const std::string order = report.exact
                                ? std::string("exact")
                                : fmt_double(report.estimated_order, out.digits);
  switch (out.format) {
  case Format::exact: {
    std::cout << "n h error ratio\n";
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
      const auto &level = report.levels[k];
      std::cout << level.n << " " << fmt_double(level.h, out.digits) << " "
                << fmt_double(level.error, out.digits);
      if (k > 0 && !report.ratios.empty())
        std::cout << " " << fmt_double(report.ratios[k - 1], out.digits);
      std::cout << "\n";
    }
    std::cout << "estimated order: " << order << "\n";
    break;
  }
  case Format::json_fmt: {
    json obj;
    json levels = json::array();
    for (const auto &level : report.levels) {
      json l;
      l["n"] = level.n;
      l["h"] = level.h;
      l["error"] = level.error;
      levels.push_back(l);
    }
    obj["levels"] = levels;
    obj["ratios"] = report.ratios;
    if (report.exact)
      obj["estimated_order"] = "exact";
    else
      obj["estimated_order"] = report.estimated_order;
    std::cout << obj.dump(2) << "\n";
    break;
  }
  case Format::csv: {
    std::cout << "n,h,error,ratio\n";
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
      const auto &level = report.levels[k];
      std::cout << level.n << "," << fmt_double(level.h, out.digits) << ","
                << fmt_double(level.error, out.digits) << ",";
      if (k > 0 && !report.ratios.empty())
        std::cout << fmt_double(report.ratios[k - 1], out.digits);
      std::cout << "\n";
    }
    std::cout << "estimated_order," << order << "\n";
    break;
  }
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"End-corrected equispaced quadrature rules"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string format_name = "exact";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"exact", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--digits", out.digits, "Significant digits for decimal output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  // corrections
  std::string alpha_text, beta_text;
  int m = 0, m_right = -1, n = 0;
  bool show_b = false;
  auto *cmd_corrections =
      app.add_subcommand("corrections", "End corrections c_i for one terminal");
  cmd_corrections->add_option("--alpha", alpha_text, "Terminal offset")->required();
  cmd_corrections->add_option("--m", m, "Correction depth (max exact degree)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_corrections->add_flag("--show-b", show_b, "Also print difference coefficients");

  // weights
  auto *cmd_weights =
      app.add_subcommand("weights", "Full weight vector for a rule spec");
  cmd_weights->add_option("--alpha", alpha_text, "Left terminal offset")->required();
  cmd_weights->add_option("--beta", beta_text, "Right terminal offset (default: alpha)");
  cmd_weights->add_option("--m", m, "Correction depth")->required()
      ->check(CLI::NonNegativeNumber);
  cmd_weights->add_option("--m-right", m_right, "Right-end depth (default: --m)");
  cmd_weights->add_option("--n", n, "Node index span (n+1 base nodes)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // catalog
  std::string rule_name;
  auto *cmd_catalog = app.add_subcommand("catalog", "Named classical rules");
  cmd_catalog->add_option("name", rule_name, "Rule name, e.g. simpson38, ab:3:bwd")
      ->required();

  // integrate
  std::string builtin_text, input_path, limits_text;
  double sample_h = 0;
  bool paired = false;
  auto *cmd_integrate = app.add_subcommand("integrate", "Integrate a builtin or samples");
  auto *opt_builtin =
      cmd_integrate->add_option("--builtin", builtin_text, "poly:c0,c1,..., exp, sin");
  auto *opt_input = cmd_integrate->add_option("--input", input_path,
                                              "Sample file, one ordinate per line");
  opt_builtin->excludes(opt_input);
  cmd_integrate->add_option("--alpha", alpha_text, "Left terminal offset")->required();
  cmd_integrate->add_option("--beta", beta_text, "Right terminal offset (default: alpha)");
  cmd_integrate->add_option("--m", m, "Correction depth")->required()
      ->check(CLI::NonNegativeNumber);
  cmd_integrate->add_option("--m-right", m_right, "Right-end depth (default: --m)");
  auto *opt_n = cmd_integrate->add_option("--n", n, "Node index span (builtin input)");
  auto *opt_h = cmd_integrate->add_option("--h", sample_h, "Sample spacing");
  auto *opt_limits = cmd_integrate->add_option("--limits", limits_text, "a,b");
  cmd_integrate->add_flag("--paired", paired, "Also integrate at depth m+1");

  // order
  std::string exact_text;
  int n0 = 9, doublings = 1;
  auto *cmd_order = app.add_subcommand("order", "Empirical convergence order study");
  cmd_order->add_option("--builtin", builtin_text, "poly:c0,c1,..., exp, sin")
      ->required();
  cmd_order->add_option("--exact", exact_text, "True integral value")->required();
  cmd_order->add_option("--alpha", alpha_text, "Left terminal offset")->required();
  cmd_order->add_option("--beta", beta_text, "Right terminal offset (default: alpha)");
  cmd_order->add_option("--m", m, "Correction depth")->required()
      ->check(CLI::NonNegativeNumber);
  cmd_order->add_option("--limits", limits_text, "a,b (default: 0,1)");
  cmd_order->add_option("--n0", n0, "Initial node index span")->capture_default_str();
  cmd_order->add_option("--doublings", doublings, "Node-count doublings")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (format_name == "json")
    out.format = Format::json_fmt;
  else if (format_name == "csv")
    out.format = Format::csv;

  try {
    if (cmd_corrections->parsed()) {
      run_corrections(alpha_text, m, show_b, out);
      return 0;
    }

    const auto make_spec = [&]() {
      const Rational alpha = parse_rational(alpha_text);
      const Rational beta =
          beta_text.empty() ? alpha : parse_rational(beta_text);
      return RuleSpec{alpha, beta, m, m_right < 0 ? m : m_right, n};
    };

    if (cmd_weights->parsed()) {
      const RuleSpec spec = make_spec();
      spec.validate();
      print_weight_vector(build_weights(spec), out);
      return 0;
    }

    if (cmd_catalog->parsed()) {
      const WeightVector wv = catalog_rule(rule_name);
      print_weight_vector(wv, out, rule_name);
      return 0;
    }

    if (cmd_integrate->parsed()) {
      if (*opt_builtin) {
        if (!*opt_limits || !*opt_n)
          throw std::invalid_argument("builtin input needs --limits and --n");
        const auto [a, b] = parse_limits(limits_text);
        const RuleSpec spec = make_spec();
        const Integrand f = parse_builtin(builtin_text);
        if (paired)
          print_paired(paired_estimate(f.fn, a, b, spec.alpha, spec.beta, m, n), out);
        else
          print_estimate(integrate_function(f.fn, a, b, spec), out);
        return 0;
      }
      if (!*opt_input)
        throw std::invalid_argument("integrate needs --builtin or --input");

      SampleSet samples;
      samples.values = read_samples(input_path);
      samples.alpha = parse_rational(alpha_text);
      samples.beta = beta_text.empty() ? samples.alpha : parse_rational(beta_text);
      const int span = static_cast<int>(samples.values.size()) - 1;
      if (*opt_h && *opt_limits)
        throw std::invalid_argument("give either --h or --limits, not both");
      if (*opt_h) {
        samples.h = sample_h;
      } else if (*opt_limits) {
        const auto [a, b] = parse_limits(limits_text);
        const Rational steps = Rational(span) + samples.alpha + samples.beta;
        if (steps.sign() <= 0)
          throw std::invalid_argument("empty or inverted range: " + steps.str() +
                                      " steps");
        samples.h = (b - a) / steps.to_double();
      } else {
        throw std::invalid_argument("sample input needs --h or --limits");
      }

      const int mr = m_right < 0 ? m : m_right;
      if (paired) {
        PairedEstimate pair;
        pair.estimate_low = integrate_samples(samples, m, mr);
        pair.estimate_high = integrate_samples(samples, m + 1, mr + 1);
        pair.difference = std::abs(pair.estimate_low - pair.estimate_high);
        print_paired(pair, out);
      } else {
        print_estimate(integrate_samples(samples, m, mr), out);
      }
      return 0;
    }

    if (cmd_order->parsed()) {
      const Integrand f = parse_builtin(builtin_text);
      const double exact = parse_rational(exact_text).to_double();
      const Rational alpha = parse_rational(alpha_text);
      const Rational beta = beta_text.empty() ? alpha : parse_rational(beta_text);
      double a = 0, b = 1;
      if (!limits_text.empty()) {
        const auto [la, lb] = parse_limits(limits_text);
        a = la;
        b = lb;
      }
      print_report(estimate_order(f.fn, exact, a, b, alpha, beta, m, n0, doublings),
                   out);
      return 0;
    }
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
