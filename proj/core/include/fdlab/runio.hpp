#ifndef FDLAB_RUNIO_HPP
#define FDLAB_RUNIO_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fdlab {

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_g17(double x);

/// Minimal CSV emitter: comma-separated, '.' decimal, LF endings, one
/// header row.  All writes go through a single instance per output file.
class CsvWriter {
public:
    explicit CsvWriter(std::string path);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);
    void close();
    ~CsvWriter();

private:
    struct Impl;
    Impl* impl_;
};

/// FNV-1a hash of a canonical key=value rendering; identical resolved
/// parameters give identical hashes, which the manifests record so reruns
/// can be matched to their outputs.
std::uint64_t fnv1a_hash(const std::string& text);

/// Flat key/value run descriptor persisted as manifest.json next to the CSV
/// outputs.  Keys are sorted on write, so equal content is byte-identical.
class RunManifest {
public:
    void set(const std::string& key, double value);
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, bool value);

    std::uint64_t config_hash() const;
    std::string to_json() const;
    void write(const std::string& path) const;

private:
    std::map<std::string, std::string> entries_;  // pre-rendered values
    std::map<std::string, bool> is_string_;
};

/// Worker count for parameter sweeps: BARENBLATT_THREADS if set, otherwise
/// the available hardware parallelism.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads.  Results must
/// be written to disjoint slots by the callee; the call returns after all
/// workers join, so reductions over the slots stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Parses "key=value" configuration text (one entry per line, '#' comments).
std::map<std::string, std::string> parse_config_text(const std::string& text);

} // namespace fdlab

#endif
