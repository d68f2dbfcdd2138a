#include "fdlab/runio.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fdlab {

std::string format_g17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
    std::string path;
};

CsvWriter::CsvWriter(std::string path) : impl_(new Impl)
{
    impl_->path = path;
    impl_->out.open(path, std::ios::binary);  // LF endings on every platform
    if (!impl_->out)
        throw std::runtime_error("CsvWriter: cannot open " + path);
}

void CsvWriter::header(const std::vector<std::string>& names)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        impl_->out << (i ? "," : "") << names[i];
    impl_->out << "\n";
}

void CsvWriter::row(const std::vector<double>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << (i ? "," : "") << format_g17(values[i]);
    impl_->out << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        impl_->out << (i ? "," : "") << cells[i];
    impl_->out << "\n";
}

void CsvWriter::close()
{
    if (impl_->out.is_open())
        impl_->out.close();
}

CsvWriter::~CsvWriter()
{
    close();
    delete impl_;
}

std::uint64_t fnv1a_hash(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void RunManifest::set(const std::string& key, double value)
{
    entries_[key] = format_g17(value);
    is_string_[key] = false;
}

void RunManifest::set(const std::string& key, const std::string& value)
{
    entries_[key] = value;
    is_string_[key] = true;
}

void RunManifest::set(const std::string& key, bool value)
{
    entries_[key] = value ? "true" : "false";
    is_string_[key] = false;
}

std::uint64_t RunManifest::config_hash() const
{
    std::ostringstream os;
    for (const auto& [k, v] : entries_)
        os << k << "=" << v << "\n";
    return fnv1a_hash(os.str());
}

std::string RunManifest::to_json() const
{
    std::ostringstream os;
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first)
            os << ",\n";
        first = false;
        os << "  \"" << k << "\": ";
        if (is_string_.at(k)) {
            os << '"';
            for (char c : v) {
                if (c == '"' || c == '\\')
                    os << '\\';
                os << c;
            }
            os << '"';
        } else {
            os << v;
        }
    }
    os << "\n}\n";
    return os.str();
}

void RunManifest::write(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("RunManifest: cannot open " + path);
    out << to_json();
}

unsigned worker_count()
{
    if (const char* env = std::getenv("BARENBLATT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn)
{
    const unsigned workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

std::map<std::string, std::string> parse_config_text(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty())
            out[key] = val;
    }
    return out;
}

} // namespace fdlab
