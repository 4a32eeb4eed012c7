#include "orthocount/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace orthocount {

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.pass; });
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["run"] = {
      {"q_list", meta.q_list}, {"order", meta.order},       {"max_n", meta.max_n},
      {"skip_brute", meta.skip_brute}, {"threads", meta.threads},
  };
  j["checks"] = nlohmann::json::array();
  for (const auto& r : records) {
    j["checks"].push_back({
        {"name", r.name},
        {"params", r.params},
        {"status", r.pass ? "pass" : "fail"},
        {"left", r.left},
        {"right", r.right},
        {"elapsed_ms", r.elapsed_ms},
    });
  }
  j["passed"] = all_pass();
  return j.dump(2);
}

std::string Report::to_tsv() const {
  std::ostringstream os;
  os << "name\tparams\tstatus\tleft\tright\telapsed_ms\n";
  for (const auto& r : records) {
    os << r.name << "\t" << r.params << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.left
       << "\t" << r.right << "\t" << r.elapsed_ms << "\n";
  }
  return os.str();
}

std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& tasks,
                                    int threads) {
  std::vector<CheckRecord> records(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      auto t0 = std::chrono::steady_clock::now();
      try {
        records[i] = tasks[i]();
      } catch (const std::exception& e) {
        records[i].pass = false;
        records[i].left = std::string("error: ") + e.what();
      }
      auto t1 = std::chrono::steady_clock::now();
      records[i].elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  };
  int nthreads = std::max(1, threads);
  if (nthreads == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.name, a.params) < std::tie(b.name, b.params);
  });
  return records;
}

int default_thread_count() {
  if (const char* env = std::getenv("ORTHOCOUNT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace orthocount
