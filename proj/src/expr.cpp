#include "cyclab/expr.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cyclab/error.hpp"

namespace cyclab {

namespace {

enum class TokKind { Sigma, Delta, Tau };

struct Tok {
  TokKind kind;
  long long arg = 0;
  std::string text;
};

struct Expr {
  std::vector<Tok> gens;
  int source = 0;
};

long long parse_integer(const std::string& digits, const std::string& token) {
  if (digits.empty())
    throw ParseError("morphism expression: token '" + token + "' needs a number");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(digits, &pos);
  } catch (const std::exception&) {
    throw ParseError("morphism expression: bad number in token '" + token + "'");
  }
  if (pos != digits.size())
    throw ParseError("morphism expression: bad number in token '" + token + "'");
  return v;
}

Expr scan(const std::string& text, bool allow_tau) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw ParseError("morphism expression: empty input");
  Expr e;
  bool anchored = false;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w[0] == '@') {
      std::string num = w.substr(1);
      if (num.empty()) {
        if (i + 1 == words.size())
          throw ParseError("morphism expression: anchor '@' needs a rank");
        num = words[++i];
      }
      const long long n = parse_integer(num, w);
      if (n < 0) throw ParseError("morphism expression: negative rank in anchor");
      if (i + 1 != words.size())
        throw ParseError("morphism expression: tokens after the anchor: '" +
                         words[i + 1] + "'");
      e.source = static_cast<int>(n);
      anchored = true;
    } else if (w[0] == 's' || w[0] == 'd') {
      const long long j = parse_integer(w.substr(1), w);
      if (j < 0) throw ParseError("morphism expression: negative index in '" + w + "'");
      e.gens.push_back({w[0] == 's' ? TokKind::Sigma : TokKind::Delta, j, w});
    } else if (allow_tau && w == "t") {
      e.gens.push_back({TokKind::Tau, 1, w});
    } else if (allow_tau && w.rfind("t^", 0) == 0) {
      e.gens.push_back({TokKind::Tau, parse_integer(w.substr(2), w), w});
    } else {
      throw ParseError("morphism expression: bad token '" + w + "'");
    }
  }
  if (!anchored) throw ParseError("morphism expression: missing anchor '@<n>'");
  return e;
}

[[noreturn]] void rank_error(const Tok& t, int rank) {
  throw ParseError("morphism expression: token '" + t.text +
                   "' does not apply at rank " + std::to_string(rank));
}

}  // namespace

DeltaMap parse_delta_expr(const std::string& text) {
  const Expr e = scan(text, false);
  DeltaMap f = DeltaMap::identity(e.source);
  for (const Tok& t : e.gens) {
    const int r = f.target_rank();
    if (t.kind == TokKind::Sigma) {
      if (r < 1 || t.arg > r - 1) rank_error(t, r);
      f = delta_compose(f, DeltaMap::sigma(static_cast<int>(t.arg), r - 1));
    } else {
      if (t.arg > r + 1) rank_error(t, r);
      f = delta_compose(f, DeltaMap::delta(static_cast<int>(t.arg), r + 1));
    }
  }
  return f;
}

LambdaMap parse_lambda_expr(const std::string& text) {
  const Expr e = scan(text, true);
  LambdaMap f = LambdaMap::identity(e.source);
  for (const Tok& t : e.gens) {
    const int r = f.target_rank();
    switch (t.kind) {
      case TokKind::Sigma:
        if (r < 1 || t.arg > r - 1) rank_error(t, r);
        f = lambda_compose(f, embed_j(DeltaMap::sigma(static_cast<int>(t.arg), r - 1)));
        break;
      case TokKind::Delta:
        if (t.arg > r + 1) rank_error(t, r);
        f = lambda_compose(f, embed_j(DeltaMap::delta(static_cast<int>(t.arg), r + 1)));
        break;
      case TokKind::Tau:
        f = lambda_compose(f, LambdaMap::tau_power(r, t.arg));
        break;
    }
  }
  return f;
}

std::string delta_morphism_to_json(const DeltaMap& f) {
  nlohmann::json out;
  out["cat"] = "delta";
  out["source"] = f.source_rank();
  out["target"] = f.target_rank();
  out["values"] = f.values();
  return out.dump();
}

DeltaMap delta_morphism_from_json(const std::string& text) {
  try {
    const nlohmann::json in = nlohmann::json::parse(text);
    if (in.at("cat").get<std::string>() != "delta")
      throw ParseError("morphism JSON: expected cat \"delta\"");
    return DeltaMap(in.at("source").get<int>(), in.at("target").get<int>(),
                    in.at("values").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
}

std::string lambda_morphism_to_json(const LambdaMap& f) {
  nlohmann::json out;
  out["cat"] = "lambda";
  out["source"] = f.source_rank();
  out["target"] = f.target_rank();
  out["values"] = f.values();
  return out.dump();
}

LambdaMap lambda_morphism_from_json(const std::string& text) {
  try {
    const nlohmann::json in = nlohmann::json::parse(text);
    if (in.at("cat").get<std::string>() != "lambda")
      throw ParseError("morphism JSON: expected cat \"lambda\"");
    return LambdaMap(in.at("source").get<int>(), in.at("target").get<int>(),
                     in.at("values").get<std::vector<long long>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("morphism JSON: ") + e.what());
  }
}

std::string pl_to_json(const PLMap& f) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& [x, y] : f.points())
    pts.push_back({format_rational(x), format_rational(y)});
  nlohmann::json out;
  out["breakpoints"] = pts;
  return out.dump();
}

PLMap pl_from_json(const std::string& text) {
  try {
    const nlohmann::json in = nlohmann::json::parse(text);
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& entry : in.at("breakpoints")) {
      const auto pair = entry.get<std::vector<std::string>>();
      if (pair.size() != 2)
        throw ParseError("piecewise-linear JSON: breakpoints are [x, y] pairs");
      pts.emplace_back(parse_rational(pair[0]), parse_rational(pair[1]));
    }
    return PLMap::from_points(std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("piecewise-linear JSON: ") + e.what());
  }
}

}  // namespace cyclab
