#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthocount/brute_groups.hpp"
#include "orthocount/degree_sums.hpp"
#include "orthocount/report.hpp"

using namespace orthocount;

namespace {

Integer gl_order(int n, int q) {
  Integer r = int_pow(q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= int_pow(q, static_cast<unsigned long>(i)) - 1;
  return r;
}

bool identity_supports(const std::string& name, int q) {
  return name != "sp-chain" || q % 2 == 1;
}

std::vector<int> parse_q_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CLI::ValidationError("--q", "empty q list");
  return out;
}

// Groups small enough for explicit construction.
struct BruteCase {
  int n, q;
};
const std::vector<BruteCase> kOrthogonalCases = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
const std::vector<BruteCase> kSymplecticCases = {{1, 3}, {1, 5}, {2, 3}};

// One shared build per spec within a run.
const MatrixGroup& cached_group(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, MatrixGroup> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = spec.str();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_group(spec)).first;
  return it->second;
}

std::string params_str(int n, int q, int type) {
  std::ostringstream os;
  os << "dim=" << 2 * n << " q=" << q;
  if (type) os << " type=" << (type > 0 ? "+" : "-");
  return os.str();
}

CheckRecord make_record(std::string name, std::string params, const Integer& left,
                        const Integer& right) {
  CheckRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.left = left.get_str();
  r.right = right.get_str();
  r.pass = left == right;
  return r;
}

std::function<CheckRecord()> identity_task(const std::string& name, int q, int order) {
  return [name, q, order]() {
    IdentityOutcome out = verify_identity(name, q, order);
    CheckRecord r;
    r.name = "identity/" + name;
    std::ostringstream ps;
    ps << "q=" << q << " order=" << order;
    r.params = ps.str();
    r.pass = out.pass;
    r.left = out.lhs;
    r.right = out.rhs;
    return r;
  };
}

std::vector<std::function<CheckRecord()>> identity_tasks(const std::vector<int>& q_filter,
                                                         int order_override) {
  std::vector<std::function<CheckRecord()>> tasks;
  for (const std::string& name : identity_registry()) {
    IdentityDefaults def = identity_defaults(name);
    for (int q : def.q_list) {
      if (!q_filter.empty() &&
          std::find(q_filter.begin(), q_filter.end(), q) == q_filter.end())
        continue;
      if (!identity_supports(name, q)) continue;
      tasks.push_back(identity_task(name, q, order_override > 0 ? order_override : def.order));
    }
  }
  return tasks;
}

bool q_selected(const std::vector<int>& filter, int q) {
  return filter.empty() || std::find(filter.begin(), filter.end(), q) != filter.end();
}

std::vector<std::function<CheckRecord()>> report_tasks(const std::vector<int>& q_filter,
                                                       int max_n, int order_override,
                                                       bool skip_brute) {
  std::vector<std::function<CheckRecord()>> tasks = identity_tasks(q_filter, order_override);

  // Degree sum = involution count, and the FGS cross-oracle, on the
  // explicitly constructible groups.
  if (!skip_brute) {
    for (const auto& c : kOrthogonalCases) {
      if (c.n > max_n || !q_selected(q_filter, c.q)) continue;
      for (int type : {+1, -1}) {
        int n = c.n, q = c.q;
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          return make_record("sigma-vs-involutions/O", params_str(n, q, type),
                             sigma_O(n, q, type), count_involutions(o));
        });
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          Coset coset = (n % 2 == 0) ? Coset::SO : Coset::OMinusSO;
          return make_record("sigma-vs-involutions/SO", params_str(n, q, type),
                             sigma_SO(n, q, type), count_involutions(o, coset));
        });
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          return make_record("fgs-cross-oracle/O", params_str(n, q, type),
                             fgs_involution_count(InvolutionSet::O, n, q, type),
                             count_involutions(o));
        });
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          return make_record("fgs-cross-oracle/SO", params_str(n, q, type),
                             fgs_involution_count(InvolutionSet::SO, n, q, type),
                             count_involutions(o, Coset::SO));
        });
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          return make_record("fgs-cross-oracle/O-minus-SO", params_str(n, q, type),
                             fgs_involution_count(InvolutionSet::OMinusSO, n, q, type),
                             count_involutions(o, Coset::OMinusSO));
        });
      }
    }
    for (const auto& c : kSymplecticCases) {
      if (c.n > max_n || !q_selected(q_filter, c.q)) continue;
      int n = c.n, q = c.q;
      tasks.push_back([n, q]() {
        const MatrixGroup& sp = cached_group({GroupKind::Sp, n, q, 0});
        Integer expected = group_order(sp.spec()) / gl_order(n, q);
        return make_record("sp-twisted-involutions", params_str(n, q, 0),
                           count_twisted_involutions_sp(sp), expected);
      });
    }
    // Strong sigma-reality in dimension 2 mod 4.
    for (const auto& c : std::vector<BruteCase>{{1, 2}, {1, 3}, {3, 2}}) {
      if (c.n > max_n || !q_selected(q_filter, c.q)) continue;
      for (int type : {+1, -1}) {
        int n = c.n, q = c.q;
        tasks.push_back([n, q, type]() {
          const MatrixGroup& o = cached_group({GroupKind::O, n, q, type});
          MatrixGroup so = so_subgroup(o);
          SigmaRealOutcome out = check_strongly_sigma_real(so, o);
          CheckRecord r;
          r.name = "strongly-sigma-real";
          r.params = params_str(n, q, type);
          r.pass = out.ok;
          r.left = out.ok ? "all inverted" : std::to_string(out.failures.size()) + " failures";
          r.right = "all inverted";
          return r;
        });
      }
    }
  }

  // FGS integrality sweep (series only; feasible regardless of brute force).
  for (int q : {2, 3, 4, 5}) {
    if (!q_selected(q_filter, q)) continue;
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      for (int type : {+1, -1}) {
        tasks.push_back([n, q, type]() {
          Integer o_count = fgs_involution_count(InvolutionSet::O, n, q, type);
          Integer so_count = fgs_involution_count(InvolutionSet::SO, n, q, type);
          Integer coset_count = fgs_involution_count(InvolutionSet::OMinusSO, n, q, type);
          CheckRecord r;
          r.name = "fgs-integrality";
          r.params = params_str(n, q, type);
          r.pass = o_count >= 0 && so_count >= 0 && coset_count >= 0 &&
                   so_count + coset_count == o_count;
          r.left = o_count.get_str() + "," + so_count.get_str() + "," + coset_count.get_str();
          r.right = "integers with I(SO)+I(O-SO)=I(O)";
          return r;
        });
      }
    }
  }

  // Oracle equivalence of the two Sigma routes.
  for (int q : {2, 3}) {
    if (!q_selected(q_filter, q)) continue;
    for (int n = 1; n <= std::min(3, max_n); ++n) {
      for (int type : {+1, -1}) {
        tasks.push_back([n, q, type]() {
          return make_record("sigma-route-equivalence/O", params_str(n, q, type),
                             sigma_O(n, q, type, SigmaRoute::GradedDP),
                             sigma_O(n, q, type, SigmaRoute::ExplicitEnumeration));
        });
        tasks.push_back([n, q, type]() {
          return make_record("sigma-route-equivalence/SO", params_str(n, q, type),
                             sigma_SO(n, q, type, SigmaRoute::GradedDP),
                             sigma_SO(n, q, type, SigmaRoute::ExplicitEnumeration));
        });
      }
    }
  }

  // Symplectic chain: Sigma(Sp(2n,q)) against the Euler product coefficient.
  for (int q : {3, 5}) {
    if (!q_selected(q_filter, q)) continue;
    for (int n = 1; n <= std::min(4, max_n); ++n) {
      tasks.push_back([n, q]() {
        Integer lhs = sigma_Sp(n, q);
        Rational coeff = named_series("euler-rhs", q, n).coeff(n);
        Integer prod = 1;
        for (int i = 1; i <= n; ++i) prod *= int_pow(q, 2ul * static_cast<unsigned long>(i)) - 1;
        return make_record("sp-chain-sigma", params_str(n, q, 0), lhs,
                           (coeff * Rational(prod)).to_integer());
      });
    }
  }

  return tasks;
}

int emit_report(Report& report, bool tsv) {
  std::cout << (tsv ? report.to_tsv() : report.to_json()) << std::endl;
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthocount: exact verification of character degree sums and involution "
               "counts in finite orthogonal, special orthogonal and symplectic groups"};
  app.require_subcommand(1);

  std::string q_csv;
  int order = -1;
  int max_n = 3;
  int threads = default_thread_count();
  bool tsv = false, json_out = false, all_ids = false, skip_brute = false;
  std::vector<std::string> ids;

  auto* verify = app.add_subcommand("verify", "verify generating-function identities");
  verify->add_option("--id", ids, "identity name(s) from the registry");
  verify->add_flag("--all", all_ids, "verify every identity in the registry");
  verify->add_option("--q", q_csv, "comma-separated list of prime powers");
  verify->add_option("--order", order, "truncation order (default: per-identity)");
  verify->add_flag("--json", json_out, "JSON output (default)");
  verify->add_flag("--tsv", tsv, "TSV output");
  verify->add_option("--threads", threads, "parallel check workers");

  auto* expand = app.add_subcommand("expand", "print exact series coefficients");
  std::string series_name;
  int expand_q = 2;
  int expand_order = 12;
  expand->add_option("--series", series_name, "series name")->required();
  expand->add_option("--q", expand_q, "prime power q")->required();
  expand->add_option("--order", expand_order, "truncation order");
  expand->add_flag("--json", json_out, "JSON output (default)");
  expand->add_flag("--tsv", tsv, "TSV output");

  auto* brute = app.add_subcommand("brute", "explicit small-group computations");
  std::string action, kind_str = "O", type_str = "+", coset_str = "all";
  int dim = 2, brute_q = 2;
  brute->add_option("action", action, "count-involutions | twisted-sp | sigma-real")->required();
  brute->add_option("--kind", kind_str, "O | SO | Sp");
  brute->add_option("--type", type_str, "+ | -");
  brute->add_option("--coset", coset_str, "all | so | other (for O groups)");
  brute->add_option("--dim", dim, "full dimension 2n")->required();
  brute->add_option("--q", brute_q, "prime power q")->required();

  auto* report_cmd = app.add_subcommand("report", "full cross-check matrix");
  report_cmd->add_option("--max-n", max_n, "largest half-dimension for group checks");
  report_cmd->add_option("--q", q_csv, "comma-separated list of prime powers");
  report_cmd->add_option("--order", order, "identity truncation order (default: per-identity)");
  report_cmd->add_flag("--skip-brute", skip_brute, "identity-only run");
  report_cmd->add_flag("--json", json_out, "JSON output (default)");
  report_cmd->add_flag("--tsv", tsv, "TSV output");
  report_cmd->add_option("--threads", threads, "parallel check workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<int> q_list = q_csv.empty() ? std::vector<int>{} : parse_q_list(q_csv);

    if (verify->parsed()) {
      std::vector<std::string> selected = all_ids ? identity_registry() : ids;
      if (selected.empty()) {
        std::cerr << "verify: give --id <name> (or --all); registry:";
        for (const auto& n : identity_registry()) std::cerr << " " << n;
        std::cerr << std::endl;
        return 2;
      }
      for (const auto& name : selected) identity_defaults(name);  // validates names
      std::vector<std::function<CheckRecord()>> tasks;
      for (const auto& name : selected) {
        IdentityDefaults def = identity_defaults(name);
        std::vector<int> qs = q_list.empty() ? def.q_list : q_list;
        size_t before = tasks.size();
        for (int q : qs) {
          if (!identity_supports(name, q)) continue;
          tasks.push_back(identity_task(name, q, order > 0 ? order : def.order));
        }
        if (!all_ids && tasks.size() == before) {
          std::cerr << "verify: no valid q for identity '" << name
                    << "' (sp-chain needs odd q)" << std::endl;
          return 2;
        }
      }
      Report report;
      report.meta = {q_list, order, 0, false, threads};
      report.records = run_checks(tasks, threads);
      return emit_report(report, tsv);
    }

    if (expand->parsed()) {
      TruncatedSeries s = named_series(series_name, expand_q, expand_order);
      if (tsv) {
        for (int n = 0; n <= s.order(); ++n)
          std::cout << n << "\t" << s.coeff(n).str() << "\n";
      } else {
        nlohmann::json j;
        j["series"] = series_name;
        j["q"] = expand_q;
        j["order"] = expand_order;
        auto coeffs = nlohmann::json::array();
        for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s.coeff(n).str());
        j["coeffs"] = coeffs;
        std::cout << j.dump(2) << std::endl;
      }
      return 0;
    }

    if (brute->parsed()) {
      if (dim < 2 || dim % 2 != 0) {
        std::cerr << "brute: --dim must be even and >= 2" << std::endl;
        return 2;
      }
      int n = dim / 2;
      int type = (type_str == "-") ? -1 : +1;
      if (action == "count-involutions") {
        GroupKind kind = kind_str == "Sp" ? GroupKind::Sp
                         : kind_str == "SO" ? GroupKind::SO
                                            : GroupKind::O;
        Coset coset = coset_str == "so" ? Coset::SO
                      : coset_str == "other" ? Coset::OMinusSO
                                             : Coset::All;
        GroupSpec spec{kind, n, brute_q, kind == GroupKind::Sp ? 0 : type};
        std::cout << count_involutions(build_group(spec), coset).get_str() << std::endl;
        return 0;
      }
      if (action == "twisted-sp") {
        GroupSpec spec{GroupKind::Sp, n, brute_q, 0};
        std::cout << count_twisted_involutions_sp(build_group(spec)).get_str() << std::endl;
        return 0;
      }
      if (action == "sigma-real") {
        GroupSpec spec{GroupKind::O, n, brute_q, type};
        MatrixGroup o = build_group(spec);
        MatrixGroup so = so_subgroup(o);
        SigmaRealOutcome out = check_strongly_sigma_real(so, o);
        if (out.ok) {
          std::cout << "pass: all " << out.checked << " elements of SO"
                    << (type > 0 ? "+" : "-") << "(" << dim << "," << brute_q
                    << ") are inverted by a coset involution" << std::endl;
          return 0;
        }
        std::cout << "fail: " << out.failures.size() << " of " << out.checked
                  << " elements have no inverting coset involution" << std::endl;
        return 1;
      }
      std::cerr << "brute: unknown action '" << action << "'" << std::endl;
      return 2;
    }

    if (report_cmd->parsed()) {
      Report report;
      report.meta = {q_list, order, max_n, skip_brute, threads};
      report.records = run_checks(report_tasks(q_list, max_n, order, skip_brute), threads);
      return emit_report(report, tsv);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
