#include "binframe/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <mutex>
#include <span>
#include <thread>

#include "binframe/error.hpp"
#include "binframe/text_format.hpp"

namespace binframe {

namespace {

using Encodings = std::vector<Word>;

void check_range(int n, int k) {
    if (n < 1 || n > kMaxEnumerationDim) {
        throw Error(ErrorKind::OutOfRange, "enumeration dimension " + std::to_string(n) + " outside [1, " +
                                               std::to_string(kMaxEnumerationDim) + "]");
    }
    const int top = (1 << n) - 1;
    if (k < n || k > top) {
        throw Error(ErrorKind::OutOfRange,
                    "frame size " + std::to_string(k) + " outside [" + std::to_string(n) + ", " + std::to_string(top) +
                        "] for n = " + std::to_string(n));
    }
}

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks share no
// mutable state; the first exception thrown is rethrown after all joins.
template <class Task>
void run_tasks(std::size_t count, int workers, Task&& task) {
    const auto threads = static_cast<std::size_t>(std::max(1, workers));
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next.store(count);
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

// Depth-first search over ascending k-subsets of {1, ..., 2^n - 1} that keeps
// the partial frame operator S = sum f f^T. The remaining r vectors must add
// D = S + I, a sum of r rank-one matrices, so rank(D) > r prunes. With one
// vector left, f f^T has diagonal f, which pins the only candidate.
class ParsevalSearch {
public:
    ParsevalSearch(int n, int k) : n_(n), k_(k), top_((Word{1} << n) - 1) {}

    // Number of possible smallest elements; task t starts at encoding t + 1.
    std::size_t task_count() const { return static_cast<std::size_t>(top_ - static_cast<Word>(k_ - 1)); }

    template <class Sink>
    void run_task(std::size_t task, Sink&& sink) {
        const Word first = static_cast<Word>(task) + 1;
        std::array<Word, kMaxEnumerationDim> s{};
        add_outer(s, first);
        chosen_[0] = first;
        dfs(1, first, s, sink);
    }

private:
    static void add_outer(std::array<Word, kMaxEnumerationDim>& s, Word v) {
        for (Word w = v; w != 0; w &= w - 1) {
            s[static_cast<std::size_t>(std::countr_zero(w))] ^= v;
        }
    }

    int rank_of(std::array<Word, kMaxEnumerationDim> d) const {
        int r = 0;
        for (int col = 0; col < n_; ++col) {
            const Word bit = Word{1} << col;
            int pivot = -1;
            for (int i = r; i < n_; ++i) {
                if (d[static_cast<std::size_t>(i)] & bit) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) {
                continue;
            }
            std::swap(d[static_cast<std::size_t>(r)], d[static_cast<std::size_t>(pivot)]);
            for (int i = r + 1; i < n_; ++i) {
                if (d[static_cast<std::size_t>(i)] & bit) {
                    d[static_cast<std::size_t>(i)] ^= d[static_cast<std::size_t>(r)];
                }
            }
            ++r;
        }
        return r;
    }

    template <class Sink>
    void dfs(int depth, Word last, const std::array<Word, kMaxEnumerationDim>& s, Sink& sink) {
        std::array<Word, kMaxEnumerationDim> d{};
        bool done = true;
        for (int a = 0; a < n_; ++a) {
            d[static_cast<std::size_t>(a)] = s[static_cast<std::size_t>(a)] ^ (Word{1} << a);
            done = done && d[static_cast<std::size_t>(a)] == 0;
        }
        const int remaining = k_ - depth;
        if (remaining == 0) {
            if (done) {
                sink(std::span<const Word>(chosen_.data(), static_cast<std::size_t>(k_)));
            }
            return;
        }
        if (remaining == 1) {
            Word f = 0;
            for (int a = 0; a < n_; ++a) {
                f |= d[static_cast<std::size_t>(a)] & (Word{1} << a);
            }
            if (f <= last) {
                return;
            }
            for (int a = 0; a < n_; ++a) {
                const Word expected = ((f >> a) & 1U) ? f : 0;
                if (d[static_cast<std::size_t>(a)] != expected) {
                    return;
                }
            }
            chosen_[static_cast<std::size_t>(depth)] = f;
            sink(std::span<const Word>(chosen_.data(), static_cast<std::size_t>(k_)));
            return;
        }
        if (rank_of(d) > remaining) {
            return;
        }
        const Word limit = top_ - static_cast<Word>(remaining - 1);
        for (Word v = last + 1; v <= limit; ++v) {
            auto next = s;
            add_outer(next, v);
            chosen_[static_cast<std::size_t>(depth)] = v;
            dfs(depth + 1, v, next, sink);
        }
    }

    int n_;
    int k_;
    Word top_;
    std::array<Word, 64> chosen_{};
};

Encodings complement_encodings(int n, const Encodings& sorted) {
    Encodings out;
    const Word top = (Word{1} << n) - 1;
    auto it = sorted.begin();
    for (Word x = 1; x <= top; ++x) {
        if (it != sorted.end() && *it == x) {
            ++it;
            continue;
        }
        out.push_back(x);
    }
    return out;
}

struct ClassAccumulator {
    Encodings representative;
    std::size_t count = 0;
    Encodings complement_representative;

    void merge(const ClassAccumulator& other) {
        representative = std::min(representative, other.representative);
        if (!other.complement_representative.empty()) {
            complement_representative = complement_representative.empty()
                                            ? other.complement_representative
                                            : std::min(complement_representative, other.complement_representative);
        }
        count += other.count;
    }
};

using ClassMap = std::map<CanonicalKey, ClassAccumulator>;

ClassMap classify_raw(int n, int k, const SearchConfig& config, bool track_complements) {
    check_range(n, k);
    ParsevalSearch proto(n, k);
    const std::size_t tasks = proto.task_count();
    std::vector<ClassMap> partial(tasks);

    run_tasks(tasks, config.workers, [&](std::size_t t) {
        ParsevalSearch search(n, k);
        ClassMap& local = partial[t];
        search.run_task(t, [&](std::span<const Word> enc) {
            const Frame frame = Frame::from_encodings(n, enc);
            CanonicalKey key = canonical_key(Grammian::of(frame));
            auto [it, inserted] = local.try_emplace(std::move(key));
            ClassAccumulator& acc = it->second;
            Encodings members(enc.begin(), enc.end());
            if (track_complements) {
                Encodings comp = complement_encodings(n, members);
                if (inserted || comp < acc.complement_representative) {
                    acc.complement_representative = std::move(comp);
                }
            }
            if (inserted) {
                // Frames arrive in lexicographic order within a task.
                acc.representative = std::move(members);
            }
            ++acc.count;
        });
    });

    ClassMap merged;
    for (auto& local : partial) {
        for (auto& [key, acc] : local) {
            auto [it, inserted] = merged.try_emplace(key, acc);
            if (!inserted) {
                it->second.merge(acc);
            }
        }
    }
    return merged;
}

std::vector<SwitchingClass> sorted_classes(std::vector<SwitchingClass> classes) {
    std::ranges::sort(classes, [](const SwitchingClass& a, const SwitchingClass& b) {
        return a.representative.encodings() < b.representative.encodings();
    });
    return classes;
}

std::vector<SwitchingClass> classes_by_complement(int n, int k, const SearchConfig& config) {
    const int partner = (1 << n) - 1 - k;
    if (partner < n) {
        return {};
    }
    std::vector<SwitchingClass> out;
    for (const auto& [key, acc] : classify_raw(n, partner, config, true)) {
        Frame rep = Frame::from_encodings(n, acc.complement_representative);
        CanonicalKey rep_key = canonical_key(Grammian::of(rep));
        out.push_back(SwitchingClass{std::move(rep_key), std::move(rep), acc.count});
    }
    return sorted_classes(std::move(out));
}

} // namespace

void enumerate_parseval(int n, int k, const std::function<void(const Frame&)>& sink, int workers) {
    check_range(n, k);
    ParsevalSearch proto(n, k);
    const std::size_t tasks = proto.task_count();
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) {
            proto.run_task(t, [&](std::span<const Word> enc) { sink(Frame::from_encodings(n, enc)); });
        }
        return;
    }
    std::vector<Encodings> buffers(tasks);
    run_tasks(tasks, workers, [&](std::size_t t) {
        ParsevalSearch search(n, k);
        search.run_task(t, [&](std::span<const Word> enc) { buffers[t].insert(buffers[t].end(), enc.begin(), enc.end()); });
    });
    const auto stride = static_cast<std::size_t>(k);
    for (const auto& buffer : buffers) {
        for (std::size_t off = 0; off < buffer.size(); off += stride) {
            sink(Frame::from_encodings(n, std::span<const Word>(buffer.data() + off, stride)));
        }
    }
}

std::vector<Frame> enumerate_parseval(int n, int k, int workers) {
    std::vector<Frame> out;
    enumerate_parseval(n, k, [&](const Frame& f) { out.push_back(f); }, workers);
    return out;
}

std::vector<SwitchingClass> classify(int n, int k, const SearchConfig& config) {
    std::vector<SwitchingClass> out;
    for (auto& [key, acc] : classify_raw(n, k, config, false)) {
        out.push_back(SwitchingClass{key, Frame::from_encodings(n, acc.representative), acc.count});
    }
    return sorted_classes(std::move(out));
}

std::vector<CatalogRow> catalog(int n, std::optional<int> k_max, const SearchConfig& config) {
    check_range(n, n);
    const int top = (1 << n) - 1;
    const int last = k_max ? std::min(*k_max, top) : top;
    const int half = (1 << (n - 1)) - 1;
    std::vector<CatalogRow> rows;
    for (int k = n; k <= last; ++k) {
        auto classes = (config.use_complement_shortcut && n >= 3 && k > half) ? classes_by_complement(n, k, config)
                                                                              : classify(n, k, config);
        if (!classes.empty()) {
            rows.push_back(CatalogRow{n, k, std::move(classes)});
        }
    }
    return rows;
}

std::string format_catalog_line(const SwitchingClass& c) {
    const Frame& rep = c.representative;
    return std::to_string(rep.dim()) + "\t" + std::to_string(rep.size()) + "\t" + format_encodings(rep) + "\t" +
           c.key.to_string() + "\t" + std::to_string(c.member_count);
}

std::string format_catalog(const std::vector<CatalogRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (const auto& c : row.classes) {
            out += format_catalog_line(c);
            out.push_back('\n');
        }
    }
    return out;
}

CatalogLine parse_catalog_line(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto tab = line.find('\t');
        fields.push_back(line.substr(0, tab));
        if (tab == std::string_view::npos) {
            break;
        }
        line.remove_prefix(tab + 1);
    }
    if (fields.size() != 5) {
        throw Error(ErrorKind::Parse, "catalog line needs 5 tab-separated fields");
    }
    auto number = [](std::string_view text) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            throw Error(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
        }
        return value;
    };
    const auto n = static_cast<int>(number(fields[0]));
    const auto k = static_cast<int>(number(fields[1]));
    Frame rep = parse_frame(std::string(fields[0]) + ";" + std::string(fields[2]));
    if (rep.size() != static_cast<std::size_t>(k)) {
        throw Error(ErrorKind::Parse, "catalog line lists " + std::to_string(rep.size()) + " vectors for k = " +
                                          std::to_string(k));
    }
    return CatalogLine{n, k, std::move(rep), CanonicalKey::parse(fields[3]), number(fields[4])};
}

} // namespace binframe
