#pragma once

#include <functional>
#include <string>
#include <vector>

namespace orthocount {

struct CheckRecord {
  std::string name;    // e.g. "identity/T-product"
  std::string params;  // e.g. "q=3 order=12"
  bool pass = false;
  std::string left;    // computed value(s), exact strings
  std::string right;
  double elapsed_ms = 0.0;
};

struct RunMeta {
  std::vector<int> q_list;
  int order = 0;
  int max_n = 0;
  bool skip_brute = false;
  int threads = 1;
};

struct Report {
  RunMeta meta;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  std::string to_json() const;  // one object per run
  std::string to_tsv() const;   // one row per record
};

// Runs the tasks on up to `threads` workers and returns the records sorted
// canonically by (name, params), independent of completion order. A task
// that throws becomes a failed record carrying the error text.
std::vector<CheckRecord> run_checks(const std::vector<std::function<CheckRecord()>>& tasks,
                                    int threads);

// --threads default: ORTHOCOUNT_THREADS env var, else hardware concurrency.
int default_thread_count();

}  // namespace orthocount
