/* cyclab — exact arithmetic for the simplicial, cyclic, and circle structures
   in this library.  Every command is deterministic: same arguments, same seed,
   same bytes out.  Exit codes: 0 success, 1 failed audit, 2 usage error. */

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclab/arch_circle.hpp"
#include "cyclab/cyclic_set.hpp"
#include "cyclab/delta.hpp"
#include "cyclab/error.hpp"
#include "cyclab/expr.hpp"
#include "cyclab/interval.hpp"
#include "cyclab/lambda.hpp"
#include "cyclab/ordered_group.hpp"
#include "cyclab/rational.hpp"
#include "cyclab/realization.hpp"
#include "cyclab/rng.hpp"

using namespace cyclab;

namespace {

/* Shared option bag; each leaf command owns one instance. */
struct Opts {
  std::string format = "text";
  long long seed = 0;
  int samples = 200;
  int nmax = 4;
  std::string model = "rational";
  std::string set_src = "circle";
  std::vector<std::string> args;
  int level = 0;
  int cell = 0;
  std::string seq;
  std::string point_label;
  int period = 3;
  int n = 0;
  int m = 0;
};

std::string read_payload(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' || c == '[';
  }
  return false;
}

long long parse_integer_arg(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(what + ": bad integer '" + s + "'");
  }
  if (pos != s.size()) throw ParseError(what + ": bad integer '" + s + "'");
  return v;
}

DeltaMap read_delta(const std::string& arg) {
  const std::string s = read_payload(arg);
  if (looks_like_json(s)) return delta_morphism_from_json(s);
  return parse_delta_expr(s);
}

LambdaMap read_lambda(const std::string& arg) {
  const std::string s = read_payload(arg);
  if (looks_like_json(s)) return lambda_morphism_from_json(s);
  return parse_lambda_expr(s);
}

PLMap read_pl(const std::string& arg) { return pl_from_json(read_payload(arg)); }

/* Builtin truncated cyclic sets, or a JSON table from the argument / stdin. */
FiniteCyclicSet load_cyclic_set(const std::string& src, int truncation) {
  if (src == "-" || looks_like_json(src)) return cyclic_set_from_json(read_payload(src));
  if (src == "point") return point_cyclic_set(truncation);
  if (src == "circle") return yoneda_cyclic(0, truncation);
  if (src.rfind("representable:", 0) == 0) {
    const long long k = parse_integer_arg(src.substr(14), "cyclic set");
    if (k < 0) throw ParseError("cyclic set: negative representable rank");
    return yoneda_cyclic(static_cast<int>(k), truncation);
  }
  if (src == "square") {
    const FiniteCyclicSet c = yoneda_cyclic(0, truncation);
    return cyclic_product(c, c);
  }
  throw ParseError("cyclic set: unknown source '" + src +
                   "' (use -, point, circle, representable:<k>, square)");
}

AbstractCircle load_circle(const std::string& src) {
  if (src == "-" || looks_like_json(src)) return circle_from_json(read_payload(src));
  if (src.rfind("period:", 0) == 0) {
    const long long p = parse_integer_arg(src.substr(7), "circle");
    if (p < 1) throw ParseError("circle: period must be at least 1");
    return quotient_circle(integer_arch(static_cast<int>(p)));
  }
  throw ParseError("circle: unknown source '" + src + "' (use -, period:<p>)");
}

int finish_audit(const AuditReport& rep, const std::string& format) {
  if (format == "json") {
    nlohmann::json out;
    out["subject"] = rep.subject;
    out["checked"] = rep.checked;
    out["passed"] = rep.passed();
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : rep.failures) fails.push_back({{"law", f.law}, {"detail", f.detail}});
    out["failures"] = fails;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << rep.summary() << "\n";
  }
  return rep.passed() ? 0 : 1;
}

void emit_delta(const DeltaMap& f, const std::string& format) {
  if (format == "json")
    std::cout << delta_morphism_to_json(f) << "\n";
  else
    std::cout << f.to_string() << "\n";
}

void emit_lambda(const LambdaMap& f, const std::string& format) {
  if (format == "json")
    std::cout << lambda_morphism_to_json(f) << "\n";
  else
    std::cout << f.to_string() << "\n";
}

void emit_pl(const PLMap& f, const std::string& format) {
  if (format == "json")
    std::cout << pl_to_json(f) << "\n";
  else
    std::cout << f.to_string() << "\n";
}

/* --model dispatch over the interval models with a literal element syntax. */
long long parse_model_element(const FiniteInterval&, const std::string& s) {
  return parse_integer_arg(s, "interval element");
}

Rational parse_model_element(const RationalUnit&, const std::string& s) {
  return parse_rational(s);
}

template <class Fn>
int with_literal_model(const std::string& tag, Fn&& fn) {
  if (tag == "rational") return fn(standard_cyclic_structure(RationalUnit{}));
  if (tag.rfind("finite:", 0) == 0) {
    const long long n = parse_integer_arg(tag.substr(7), "model");
    if (n < 0) throw ParseError("model: finite rank must be nonnegative");
    return fn(standard_cyclic_structure(FiniteInterval{static_cast<int>(n)}));
  }
  if (tag == "pl")
    throw ParseError("model: pl elements have no literal syntax; "
                     "use the sampled commands (cocycle check, classify)");
  throw ParseError("model: unknown model '" + tag + "' (use finite:<n>, rational, pl)");
}

template <class Fn>
int with_any_model(const std::string& tag, Fn&& fn) {
  if (tag == "pl") return fn(make_cyclic_structure(PLGroup{}));
  return with_literal_model(tag, fn);
}

template <class M>
MonotoneSeq<M> parse_seq_arg(const M& model, const std::string& text) {
  std::istringstream in(text);
  std::vector<typename M::Element> vals;
  for (std::string w; in >> w;) vals.push_back(parse_model_element(model, w));
  if (vals.empty())
    throw ParseError("sequence: empty; give anchored values like \"0 1/4 1\"");
  return make_seq(model, std::move(vals));
}

template <class M>
void emit_point(const FiniteCyclicSet& set, const RealizationPoint<M>& p,
                const std::string& format) {
  if (format == "json") {
    nlohmann::json out;
    out["level"] = p.level;
    out["cell"] = p.cell;
    out["label"] = set.label(p.level, p.cell);
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& v : p.seq.values) seq.push_back(p.seq.model.element_string(v));
    out["seq"] = seq;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "level " << p.level << " cell " << p.cell << " label "
              << set.label(p.level, p.cell) << " seq " << seq_string(p.seq) << "\n";
  }
}

void emit_value(const std::string& v, const std::string& format) {
  if (format == "json") {
    nlohmann::json out;
    out["value"] = v;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << v << "\n";
  }
}

void add_format(CLI::App* cmd, std::shared_ptr<Opts> o) {
  cmd->add_option("--format", o->format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for monotone, cyclic, and circle structures"};
  app.require_subcommand(1);
  int rc = 0;

  /* ---------------- delta ---------------- */
  CLI::App* delta = app.add_subcommand("delta", "monotone maps of finite intervals");
  delta->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = delta->add_subcommand(
        "compose", "compose generator words or JSON morphisms, left to right");
    c->add_option("expr", o->args, "words like \"d0 s1 @ 2\" or JSON, or -")
        ->required()
        ->expected(-1);
    add_format(c, o);
    c->callback([o, &rc] {
      DeltaMap f = read_delta(o->args.front());
      for (std::size_t i = 1; i < o->args.size(); ++i)
        f = delta_compose(f, read_delta(o->args[i]));
      emit_delta(f, o->format);
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = delta->add_subcommand(
        "factor", "epi-mono normal form as a reusable generator word");
    c->add_option("expr", o->args, "word or JSON morphism, or -")->required()->expected(1);
    add_format(c, o);
    c->callback([o, &rc] {
      const DeltaMap f = read_delta(o->args.front());
      const EpiMonoFactorization fac = epi_mono_factor(f);
      if (o->format == "json") {
        nlohmann::json out;
        out["sigma"] = fac.sigma_indices;
        out["delta"] = fac.delta_indices;
        out["source"] = f.source_rank();
        out["target"] = f.target_rank();
        std::cout << out.dump() << "\n";
      } else {
        std::string word;
        for (int s : fac.sigma_indices) word += "s" + std::to_string(s) + " ";
        for (int v : fac.delta_indices) word += "d" + std::to_string(v) + " ";
        word += "@ " + std::to_string(f.source_rank());
        std::cout << word << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = delta->add_subcommand(
        "audit", "exhaustive generator-relation check up to a rank bound");
    c->add_option("--nmax", o->nmax, "largest statement rank");
    add_format(c, o);
    c->callback([o, &rc] { rc = finish_audit(delta_relation_audit(o->nmax), o->format); });
  }

  /* ---------------- lambda ---------------- */
  CLI::App* lambda = app.add_subcommand("lambda", "cyclic-category morphisms");
  lambda->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand(
        "compose", "compose rotation words or JSON morphisms, left to right");
    c->add_option("expr", o->args, "words like \"t^2 d0 @ 1\" or JSON, or -")
        ->required()
        ->expected(-1);
    add_format(c, o);
    c->callback([o, &rc] {
      LambdaMap f = read_lambda(o->args.front());
      for (std::size_t i = 1; i < o->args.size(); ++i)
        f = lambda_compose(f, read_lambda(o->args[i]));
      emit_lambda(f, o->format);
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand(
        "decompose", "unique rotation-then-monotone factorization");
    c->add_option("expr", o->args, "word or JSON morphism, or -")->required()->expected(1);
    add_format(c, o);
    c->callback([o, &rc] {
      const LambdaMap f = read_lambda(o->args.front());
      const DeltaLambdaDecomposition dec = delta_lambda_decompose(f);
      if (o->format == "json") {
        nlohmann::json out;
        out["rotation"] = dec.rotation;
        out["monotone"] = nlohmann::json::parse(delta_morphism_to_json(dec.h));
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "rotation " << dec.rotation << "\n"
                  << "monotone " << dec.h.to_string() << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand(
        "crossed", "move an automorphism past a monotone map");
    c->add_option("gamma", o->args, "automorphism word (t^a @ n), then monotone word")
        ->required()
        ->expected(2);
    add_format(c, o);
    c->callback([o, &rc] {
      const LambdaMap gamma = read_lambda(o->args[0]);
      const DeltaMap phi = read_delta(o->args[1]);
      const CrossedDecomposition dec = crossed_decompose(gamma, phi);
      if (o->format == "json") {
        nlohmann::json out;
        out["pushforward"] = nlohmann::json::parse(delta_morphism_to_json(dec.pushforward));
        out["pullback"] = nlohmann::json::parse(lambda_morphism_to_json(dec.pullback));
        out["pullback_rotation"] = dec.pullback_rotation;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "pushforward " << dec.pushforward.to_string() << "\n"
                  << "pullback t^" << dec.pullback_rotation << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand("transpose", "order-adjoint transpose");
    c->add_option("expr", o->args, "word or JSON morphism, or -")->required()->expected(1);
    add_format(c, o);
    c->callback([o, &rc] {
      emit_lambda(lambda_transpose(read_lambda(o->args.front())), o->format);
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand(
        "audit", "exhaustive presentation-relation check up to a rank bound");
    c->add_option("--nmax", o->nmax, "largest statement rank");
    add_format(c, o);
    c->callback(
        [o, &rc] { rc = finish_audit(lambda_presentation_audit(o->nmax), o->format); });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = lambda->add_subcommand(
        "enumerate", "all morphisms between two ranks, in lexicographic order");
    c->add_option("source", o->n, "source rank")->required();
    c->add_option("target", o->m, "target rank")->required();
    add_format(c, o);
    c->callback([o, &rc] {
      if (o->n < 0 || o->m < 0) throw ParseError("enumerate: ranks must be nonnegative");
      const auto homs = enumerate_lambda_hom(o->n, o->m);
      if (o->format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& f : homs)
          out.push_back(nlohmann::json::parse(lambda_morphism_to_json(f)));
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& f : homs) std::cout << f.to_string() << "\n";
        std::cout << "total " << homs.size() << "\n";
      }
      rc = 0;
    });
  }

  /* ---------------- cyclicset ---------------- */
  CLI::App* cset = app.add_subcommand("cyclicset", "finite cyclic sets given by tables");
  cset->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = cset->add_subcommand("census", "nondegenerate cell counts per level");
    c->add_option("set", o->set_src, "-, point, circle, representable:<k>, square");
    c->add_option("--nmax", o->nmax, "truncation level for builtin sets");
    add_format(c, o);
    c->callback([o, &rc] {
      const FiniteCyclicSet s = load_cyclic_set(o->set_src, o->nmax);
      const std::vector<int> census = nondegenerate_census(s.simplicial());
      if (o->format == "json") {
        nlohmann::json out = census;
        std::cout << out.dump() << "\n";
      } else {
        for (std::size_t n = 0; n < census.size(); ++n)
          std::cout << "level " << n << ": " << census[n] << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = cset->add_subcommand("faces", "structure tables of every cell");
    c->add_option("set", o->set_src, "-, point, circle, representable:<k>, square");
    c->add_option("--nmax", o->nmax, "truncation level for builtin sets");
    add_format(c, o);
    c->callback([o, &rc] {
      const FiniteCyclicSet s = load_cyclic_set(o->set_src, o->nmax);
      if (o->format == "json") {
        std::cout << cyclic_set_to_json(s) << "\n";
      } else {
        for (int n = 0; n <= s.truncation(); ++n) {
          std::cout << "level " << n << " (" << s.level_size(n) << " cells)\n";
          for (int i = 0; i < s.level_size(n); ++i) {
            std::cout << "  cell " << i << " [" << s.label(n, i) << "]";
            if (n > 0) {
              std::cout << " faces";
              for (int j = 0; j <= n; ++j) std::cout << " " << s.face(n, j, i);
            }
            if (n < s.truncation()) {
              std::cout << " degeneracies";
              for (int j = 0; j <= n; ++j) std::cout << " " << s.degeneracy(n, j, i);
            }
            std::cout << " tau " << s.tau(n, i) << "\n";
          }
        }
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = cset->add_subcommand("audit", "simplicial and rotation relation check");
    c->add_option("set", o->set_src, "-, point, circle, representable:<k>, square");
    c->add_option("--nmax", o->nmax, "truncation level for builtin sets");
    add_format(c, o);
    c->callback([o, &rc] {
      const FiniteCyclicSet s = load_cyclic_set(o->set_src, o->nmax);
      AuditReport rep = simplicial_relation_audit(s.simplicial());
      rep.subject = "cyclic set relations";
      rep.absorb(cyclic_relation_audit(s));
      rc = finish_audit(rep, o->format);
    });
  }

  /* ---------------- realize ---------------- */
  CLI::App* realize = app.add_subcommand("realize", "points of geometric realizations");
  realize->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = realize->add_subcommand("reduce", "canonical form of a realization point");
    c->add_option("--set", o->set_src, "-, point, circle, representable:<k>, square");
    c->add_option("--nmax", o->nmax, "truncation level for builtin sets");
    c->add_option("--level", o->level, "cell level")->required();
    c->add_option("--cell", o->cell, "cell index")->required();
    c->add_option("--seq", o->seq, "anchored values, e.g. \"0 1/4 1/4 1\"")->required();
    c->add_option("--model", o->model, "finite:<n> or rational");
    add_format(c, o);
    c->callback([o, &rc] {
      const FiniteCyclicSet s = load_cyclic_set(o->set_src, o->nmax);
      rc = with_literal_model(o->model, [&](const auto& cs) {
        auto seq = parse_seq_arg(cs.model, o->seq);
        const auto p = realize_reduce(s.simplicial(), o->level, o->cell, std::move(seq));
        emit_point(s, p, o->format);
        return 0;
      });
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = realize->add_subcommand("mul", "circle product of two interval values");
    c->add_option("values", o->args, "two interval values")->required()->expected(2);
    c->add_option("--model", o->model, "finite:<n> or rational");
    add_format(c, o);
    c->callback([o, &rc] {
      rc = with_literal_model(o->model, [&](const auto& cs) {
        const auto x = make_circle_point(cs.model, parse_model_element(cs.model, o->args[0]));
        const auto y = make_circle_point(cs.model, parse_model_element(cs.model, o->args[1]));
        const auto z = circle_mul(cs, x, y);
        emit_value(cs.model.element_string(z.value), o->format);
        return 0;
      });
    });
  }
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = realize->add_subcommand(
        "act", "right action of a circle element on a realization point");
    c->add_option("value", o->args, "acting circle element")->required()->expected(1);
    c->add_option("--set", o->set_src, "-, point, circle, representable:<k>, square");
    c->add_option("--nmax", o->nmax, "truncation level for builtin sets");
    c->add_option("--level", o->level, "cell level")->required();
    c->add_option("--cell", o->cell, "cell index")->required();
    c->add_option("--seq", o->seq, "anchored values, e.g. \"0 1/4 1\"")->required();
    c->add_option("--model", o->model, "finite:<n> or rational");
    add_format(c, o);
    c->callback([o, &rc] {
      const FiniteCyclicSet s = load_cyclic_set(o->set_src, o->nmax);
      rc = with_literal_model(o->model, [&](const auto& cs) {
        auto seq = parse_seq_arg(cs.model, o->seq);
        const auto p =
            realize_reduce(s.simplicial(), o->level, o->cell, std::move(seq));
        const auto g =
            make_circle_point(cs.model, parse_model_element(cs.model, o->args[0]));
        emit_point(s, right_action(s, p, g, cs), o->format);
        return 0;
      });
    });
  }

  /* ---------------- cocycle ---------------- */
  CLI::App* coc = app.add_subcommand("cocycle", "the carrying cocycle of the circle");
  coc->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = coc->add_subcommand("eval", "carrying value on a pair of circle points");
    c->add_option("values", o->args, "two interval values")->required()->expected(2);
    c->add_option("--model", o->model, "finite:<n> or rational");
    add_format(c, o);
    c->callback([o, &rc] {
      rc = with_literal_model(o->model, [&](const auto& cs) {
        const auto x = make_circle_point(cs.model, parse_model_element(cs.model, o->args[0]));
        const auto y = make_circle_point(cs.model, parse_model_element(cs.model, o->args[1]));
        emit_value(std::to_string(cocycle(cs, x, y)), o->format);
        return 0;
      });
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = coc->add_subcommand("tables", "verification tables in dimensions 1 to 3");
    add_format(c, o);
    c->callback([o, &rc] {
      if (o->format == "json") {
        nlohmann::json dims = nlohmann::json::array();
        for (const auto& table : cocycle_table_rows()) {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& r : table)
            rows.push_back({{"a", r.a},
                            {"omega", r.omega_value},
                            {"b", {r.b0, r.b1}},
                            {"rho", r.rho_value}});
          dims.push_back(rows);
        }
        std::cout << dims.dump() << "\n";
      } else {
        std::cout << cocycle_tables_text();
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = coc->add_subcommand("check", "sampled check of the cocycle laws");
    c->add_option("--model", o->model, "finite:<n>, rational, or pl");
    c->add_option("--samples", o->samples, "number of sampled quadruples");
    c->add_option("--seed", o->seed, "sampler seed");
    add_format(c, o);
    c->callback([o, &rc] {
      rc = with_any_model(o->model, [&](const auto& cs) {
        Sampler rng(static_cast<std::uint64_t>(o->seed));
        return finish_audit(cocycle_audit(cs, o->samples, rng), o->format);
      });
    });
  }

  /* ---------------- classify ---------------- */
  {
    auto o = std::make_shared<Opts>();
    o->nmax = 3;
    CLI::App* c = app.add_subcommand(
        "classify", "audit a cyclic structure and build its extension group");
    c->add_option("--model", o->model, "finite:<n>, rational, or pl");
    c->add_option("--nmax", o->nmax, "largest audited rank");
    c->add_option("--samples", o->samples, "samples per audited law");
    c->add_option("--seed", o->seed, "sampler seed");
    add_format(c, o);
    c->callback([o, &rc] {
      rc = with_any_model(o->model, [&](const auto& cs) {
        Sampler rng(static_cast<std::uint64_t>(o->seed));
        const auto group = classify(cs, o->nmax, o->samples, rng);
        if (o->format == "json") {
          nlohmann::json out;
          out["cyclic"] = true;
          out["z"] = group.element_string(group.z());
          std::cout << out.dump() << "\n";
        } else {
          std::cout << "cyclic structure verified\n"
                    << "extension z = " << group.element_string(group.z()) << "\n";
        }
        return 0;
      });
    });
  }

  /* ---------------- pl ---------------- */
  CLI::App* pl = app.add_subcommand(
      "pl", "piecewise-linear circle maps with rational breakpoints");
  pl->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = pl->add_subcommand("compose", "compose maps, applied left to right");
    c->add_option("maps", o->args, "breakpoint JSON payloads, or -")
        ->required()
        ->expected(-1);
    add_format(c, o);
    c->callback([o, &rc] {
      PLMap f = read_pl(o->args.front());
      for (std::size_t i = 1; i < o->args.size(); ++i)
        f = pl_compose(read_pl(o->args[i]), f);
      emit_pl(f, o->format);
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = pl->add_subcommand("compare", "order comparison: -1, 0, or 1");
    c->add_option("maps", o->args, "two breakpoint JSON payloads, or -")
        ->required()
        ->expected(2);
    add_format(c, o);
    c->callback([o, &rc] {
      const int v = pl_compare(read_pl(o->args[0]), read_pl(o->args[1]));
      emit_value(std::to_string(v), o->format);
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = pl->add_subcommand("eval", "evaluate a map at a rational point");
    c->add_option("map", o->seq, "breakpoint JSON payload, or -")->required();
    c->add_option("point", o->point_label, "rational argument")->required();
    add_format(c, o);
    c->callback([o, &rc] {
      const PLMap f = read_pl(o->seq);
      emit_value(format_rational(f(parse_rational(o->point_label))), o->format);
      rc = 0;
    });
  }

  /* ---------------- arc ---------------- */
  CLI::App* arc = app.add_subcommand(
      "arc", "abstract circles and their archimedean reconstructions");
  arc->require_subcommand(1);
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = arc->add_subcommand(
        "quotient", "orbit circle of the integer object with the given period");
    c->add_option("--period", o->period, "translation period, at least 1")->required();
    add_format(c, o);
    c->callback([o, &rc] {
      if (o->period < 1) throw ParseError("quotient: period must be at least 1");
      const AbstractCircle circle = quotient_circle(integer_arch(o->period));
      if (o->format == "json") {
        std::cout << circle_to_json(circle) << "\n";
      } else {
        std::cout << "points " << circle.point_count() << "\n"
                  << "segments " << circle.segment_count() << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = arc->add_subcommand(
        "reconstruct", "rebuild the archimedean set over a base point");
    c->add_option("circle", o->set_src, "-, period:<p>, or JSON")->required();
    c->add_option("--point", o->point_label, "base point label (default: first point)");
    add_format(c, o);
    c->callback([o, &rc] {
      const AbstractCircle circle = load_circle(o->set_src);
      int x = 0;
      if (!o->point_label.empty()) {
        x = circle.find_point(o->point_label);
        if (x < 0) throw ParseError("reconstruct: unknown point label '" + o->point_label + "'");
      }
      const Reconstruction rec = reconstruct(circle, x);
      if (o->format == "json") {
        nlohmann::json out;
        out["base"] = circle.point_label(rec.base);
        out["period"] = arch_period(rec.arch);
        nlohmann::json segs = nlohmann::json::array();
        for (int a : rec.segments) segs.push_back(circle.segment_label(a));
        out["segments"] = segs;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "base " << circle.point_label(rec.base) << "\n"
                  << "period " << arch_period(rec.arch) << "\n";
        for (int a : rec.segments)
          std::cout << "segment " << circle.segment_label(a) << "\n";
      }
      rc = 0;
    });
  }
  {
    auto o = std::make_shared<Opts>();
    CLI::App* c = arc->add_subcommand("audit", "full axiom check over every base point");
    c->add_option("circle", o->set_src, "-, period:<p>, or JSON")->required();
    add_format(c, o);
    c->callback([o, &rc] {
      rc = finish_audit(circle_axiom_audit(load_circle(o->set_src)), o->format);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const NotCyclicError& e) {
    std::cerr << "not cyclic: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
