// Acceptance suite: one PASS/FAIL line per criterion.
//
//   inflmatch_acceptance <path-to-inflmatch-cli>

#include "inflmatch/content.hpp"
#include "inflmatch/embedding.hpp"
#include "inflmatch/error.hpp"
#include "inflmatch/fixtures.hpp"
#include "inflmatch/matcher.hpp"
#include "inflmatch/pipeline.hpp"
#include "inflmatch/profile_store.hpp"
#include "inflmatch/vectorizer.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace inflmatch;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli;
fs::path g_scratch;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

Matrix random_points(std::mt19937_64& rng, std::size_t m, std::size_t dims, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix x(m, dims);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < dims; ++j) x(i, j) = u(rng);
    }
    return x;
}

// Plain double loop, independent of pairwise_distances.
Matrix oracle_distances(const Matrix& x) {
    Matrix d(x.rows(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.rows(); ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < x.cols(); ++c) s += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
            d(i, j) = std::sqrt(s);
        }
    }
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) d(i, j) = d(j, i);
    }
    return d;
}

DocTermMatrix as_doc_term(const Matrix& values) {
    DocTermMatrix m;
    m.values = values;
    for (std::size_t i = 0; i < values.rows(); ++i) m.row_labels.push_back("r" + std::to_string(i));
    return m;
}

std::vector<std::string> report_usernames(const std::string& report) {
    std::vector<std::string> names;
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto a = line.find('\t');
        const auto b = line.find('\t', a + 1);
        names.push_back(line.substr(a + 1, b - a - 1));
    }
    return names;
}

// ---------------------------------------------------------------------------

Outcome cluster_assignment() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::string names;
    for (const auto& c : default_fixture_spec().categories) {
        const fs::path dir = g_scratch / ("ac1_" + c.name);
        const std::string brand = "brand_" + c.name;
        o.require(run_cli("synth --out " + q(dir) + " --seed 42 --brand " + c.name) == 0, "synth failed for " + c.name);
        const fs::path report = dir / "report.tsv";
        o.require(run_cli("match --users " + q(dir / "users.txt") + " --metadata " + q(dir) + " --target " + brand +
                          " --k 5 --output " + q(report)) == 0,
                  "match failed for " + c.name);

        std::map<std::string, std::string> category;
        for (const auto& e : read_user_list(dir / "users.txt")) category[e.username] = e.category.value_or("");
        const auto neighbors = report_usernames(read_file(report));
        std::size_t same = 0;
        for (const auto& n : neighbors) same += category[n] == c.name ? 1 : 0;
        o.require(neighbors.size() == 5 && same == 5,
                  c.name + ": " + std::to_string(same) + "/" + std::to_string(neighbors.size()) + " same-category");
        names += c.name + " 5/5 ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s >= 5 s");
    if (o.pass) o.detail = names + "(" + std::to_string(secs).substr(0, 5) + " s)";
    return o;
}

Outcome knn_oracle() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    const int trials = 250;
    for (int t = 0; t < trials && o.pass; ++t) {
        const std::size_t m = 2 + rng() % 29;
        const std::size_t n = 1 + rng() % 50;
        Matrix x(m, n);
        // Small integer counts, like real count rows, so ties are common.
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) x(i, j) = static_cast<double>(rng() % 3);
        }
        const std::size_t target = rng() % m;
        const std::size_t k = 1 + rng() % (m + 3);

        std::vector<std::pair<double, std::size_t>> all;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == target) continue;
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += (x(target, j) - x(i, j)) * (x(target, j) - x(i, j));
            all.emplace_back(std::sqrt(s), i);
        }
        std::sort(all.begin(), all.end());
        all.resize(std::min(k, all.size()));

        const auto got = knn_match(as_doc_term(x), target, k);
        o.require(got.neighbors.size() == all.size(), "length mismatch in trial " + std::to_string(t));
        for (std::size_t r = 0; r < all.size() && o.pass; ++r) {
            o.require(got.neighbors[r].row == all[r].second && got.neighbors[r].distance == all[r].first,
                      "rank " + std::to_string(r) + " differs in trial " + std::to_string(t));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s >= 10 s");
    if (o.pass) o.detail = std::to_string(trials) + " random matrices exact";
    return o;
}

Outcome mds_recovery() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(777);
    const int trials = 150;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t m = 3 + rng() % 23;
        const Matrix planted = random_points(rng, m, 2, -10.0, 10.0);
        const Matrix d = oracle_distances(planted);
        const Embedding2D e = classical_mds(d);
        const Matrix got = oracle_distances(e.coordinates);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                worst = std::max(worst, std::fabs(got(i, j) - d(i, j)) / d(i, j));
            }
        }
    }
    o.require(worst <= 1e-6, "worst relative error " + std::to_string(worst));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s >= 10 s");
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d sets, worst relative error %.2e", trials, worst);
        o.detail = buf;
    }
    return o;
}

Outcome smacof_monotone() {
    Outcome o;
    std::mt19937_64 rng(4242);
    const int trials = 120;
    std::size_t iterations = 0;
    for (int t = 0; t < trials && o.pass; ++t) {
        const std::size_t m = 3 + rng() % 18;
        const Matrix d = oracle_distances(random_points(rng, m, 5, -1.0, 1.0));
        const Embedding2D init = classical_mds(d);
        std::vector<double> trace;
        const Embedding2D e = smacof_refine(d, init, {}, &trace);
        iterations += trace.size() - 1;
        for (std::size_t i = 1; i < trace.size(); ++i) {
            o.require(trace[i] - trace[i - 1] <= 1e-12 * std::max(1.0, trace[i - 1]),
                      "stress rose at iteration " + std::to_string(i) + " of trial " + std::to_string(t));
        }
        o.require(e.stress <= trace.front() + 1e-12 * std::max(1.0, trace.front()),
                  "final stress above initial in trial " + std::to_string(t));
    }
    if (o.pass) o.detail = std::to_string(trials) + " instances, " + std::to_string(iterations) + " iterations checked";
    return o;
}

Outcome vectorizer_hand_check() {
    Outcome o;
    auto docs = [](std::vector<std::vector<std::string>> lists) {
        std::vector<ContentDocument> out;
        for (std::size_t i = 0; i < lists.size(); ++i) out.push_back({"u" + std::to_string(i), lists[i]});
        return out;
    };
    const auto v1 = build_vocabulary(docs({{"dog", "cat"}, {"dog", "pug"}}));
    o.require(v1.tokens() == std::vector<std::string>{"cat", "dog", "pug"}, "vocabulary {cat,dog,pug}");
    o.require(build_vocabulary(docs({{"zz", "aa", "zz"}})).tokens() == std::vector<std::string>{"aa", "zz"},
              "vocabulary {aa,zz}");
    try {
        build_vocabulary(docs({{}, {}}));
        o.require(false, "two empty docs did not raise EmptyCorpus");
    } catch (const Error& e) {
        o.require(e.code() == ErrorCode::kEmptyCorpus, "wrong error for empty corpus");
    }

    const Vocabulary cd({"cat", "dog"});
    const auto c = count_vectorize(docs({{"dog", "dog", "cat"}, {"wolf"}}), cd);
    o.require(std::fabs(c.values(0, 0) - 1.0) < 1e-9 && std::fabs(c.values(0, 1) - 2.0) < 1e-9, "row [1,2]");
    o.require(c.values(1, 0) == 0.0 && c.values(1, 1) == 0.0, "out-of-vocabulary token counted");

    DocTermMatrix counts;
    counts.values = Matrix(2, 2);
    counts.values(0, 0) = 1;
    counts.values(0, 1) = 1;
    counts.values(1, 0) = 1;
    counts.vocabulary = Vocabulary({"a", "b"});
    counts.row_labels = {"r0", "r1"};
    o.require(std::fabs(smoothed_idf(2, 2) - 1.0) < 1e-9, "idf(df=m=2) = 1");
    o.require(std::fabs(smoothed_idf(2, 1) - 1.4054651081081644) < 1e-9, "idf(df=1,m=2) = 1.405465");
    const auto t = tfidf_transform(counts);
    o.require(std::fabs(t.values(0, 0) - 0.5797386715376657) < 1e-9, "tfidf(0,0) = 0.579739");
    o.require(std::fabs(t.values(0, 1) - 0.8148024746671689) < 1e-9, "tfidf(0,1) = 0.814802");
    o.require(std::fabs(t.values(1, 0) - 1.0) < 1e-9 && t.values(1, 1) == 0.0, "tfidf row 1 = [1,0]");

    DocTermMatrix zero = counts;
    zero.values(0, 0) = zero.values(0, 1) = 0.0;
    const auto z = tfidf_transform(zero);
    o.require(z.values(0, 0) == 0.0 && z.values(0, 1) == 0.0, "all-zero row stays zero");
    if (o.pass) o.detail = "counts, vocabulary and 2x2 tf-idf table within 1e-9";
    return o;
}

Outcome end_to_end_determinism() {
    Outcome o;
    std::vector<fs::path> runs = {g_scratch / "ac6_a", g_scratch / "ac6_b"};
    for (const auto& dir : runs) {
        const auto users = q(dir / "users.txt");
        o.require(run_cli("synth --out " + q(dir) + " --seed 1234 --brand cats --target catbrand") == 0, "synth");
        o.require(run_cli("match --users " + users + " --target catbrand --output " + q(dir / "match.tsv")) == 0,
                  "match");
        o.require(run_cli("match --users " + users + " --target catbrand --weighting tfidf --k 50 --output " +
                          q(dir / "match_tfidf.tsv") + " --export-matrix " + q(dir / "matrix.tsv")) == 0,
                  "match tfidf");
        o.require(run_cli("embed --users " + users + " --target catbrand --embedding " + q(dir / "embedding.tsv") +
                          " --plot " + q(dir / "plot.svg")) == 0,
                  "embed");
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(runs[0])) {
        const auto other = runs[1] / entry.path().filename();
        o.require(fs::exists(other), "missing " + other.string());
        o.require(read_file(entry.path()) == read_file(other), entry.path().filename().string() + " differs");
        ++compared;
    }
    std::size_t count_b = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(runs[1])) ++count_b;
    o.require(count_b == compared, "runs produced different file sets");
    o.require(compared == 26 + 1 + 5, "expected 32 output files, got " + std::to_string(compared));
    if (o.pass) o.detail = std::to_string(compared) + " files byte-identical across two runs";
    return o;
}

Outcome schema_conformance() {
    Outcome o;
    const fs::path dir = g_scratch / "ac7";
    write_profile_set(generate_experiment(default_fixture_spec(), "dogs", "brand_dogs"), dir);
    std::size_t round_trips = 0;
    for (const auto& e : read_user_list(dir / "users.txt")) {
        const auto file = dir / (e.username + ".json");
        const Profile loaded = load_profile(file, e.username);
        const std::string serialized = serialize_profile(loaded);
        o.require(serialized == read_file(file), e.username + ": serialize(load(file)) != file");
        o.require(parse_profile(serialized, e.username) == loaded, e.username + ": reload differs");
        ++round_trips;
    }

    const json good = {{"is_video", false},
                       {"urls", {"x/1.jpg"}},
                       {"edge_media_preview_like", {{"count", 3}}},
                       {"edge_media_to_comment", {{"count", 1}}},
                       {"image_contents", {"alp", "ski", "valley, vale"}},
                       {"image_scores", {0.7, 0.2, 0.1}}};
    struct Corrupt {
        std::string name;
        std::string text;
        ErrorCode expected;
    };
    auto mutate = [&](const std::function<void(json&)>& f) {
        json post = good;
        f(post);
        return json::array({post}).dump();
    };
    const std::vector<Corrupt> corpus = {
        {"top-level object", good.dump(), ErrorCode::kMalformedFile},
        {"truncated json", "[{\"is_video\": false", ErrorCode::kMalformedFile},
        {"empty file", "", ErrorCode::kMalformedFile},
        {"missing is_video", mutate([](json& p) { p.erase("is_video"); }), ErrorCode::kMalformedFile},
        {"missing urls", mutate([](json& p) { p.erase("urls"); }), ErrorCode::kMalformedFile},
        {"missing like count", mutate([](json& p) { p["edge_media_preview_like"].erase("count"); }),
         ErrorCode::kMalformedFile},
        {"missing comment edge", mutate([](json& p) { p.erase("edge_media_to_comment"); }), ErrorCode::kMalformedFile},
        {"is_video as string", mutate([](json& p) { p["is_video"] = "false"; }), ErrorCode::kMalformedFile},
        {"like count as string", mutate([](json& p) { p["edge_media_preview_like"]["count"] = "3"; }),
         ErrorCode::kMalformedFile},
        {"urls as string", mutate([](json& p) { p["urls"] = "x/1.jpg"; }), ErrorCode::kMalformedFile},
        {"image_contents as string", mutate([](json& p) { p["image_contents"] = "alp"; }), ErrorCode::kMalformedFile},
        {"label as number", mutate([](json& p) { p["image_contents"][1] = 5; }), ErrorCode::kMalformedFile},
        {"score as string", mutate([](json& p) { p["image_scores"][0] = "0.7"; }), ErrorCode::kMalformedFile},
        {"tags as object", mutate([](json& p) { p["tags"] = json::object(); }), ErrorCode::kMalformedFile},
        {"scores shorter", mutate([](json& p) { p["image_scores"].erase(2); }), ErrorCode::kScoreLengthMismatch},
        {"contents longer", mutate([](json& p) { p["image_contents"].push_back("geyser"); }),
         ErrorCode::kScoreLengthMismatch},
        {"scores without contents", mutate([](json& p) { p.erase("image_contents"); }),
         ErrorCode::kScoreLengthMismatch},
        {"score above one", mutate([](json& p) { p["image_scores"][0] = 1.2; }), ErrorCode::kScoreOutOfRange},
        {"negative score", mutate([](json& p) { p["image_scores"][2] = -0.1; }), ErrorCode::kScoreOutOfRange},
        {"scores ascending", mutate([](json& p) { p["image_scores"] = {0.1, 0.2, 0.7}; }), ErrorCode::kMalformedFile},
    };
    std::size_t rejected = 0;
    for (const auto& c : corpus) {
        const auto file = dir / "corrupt.json";
        std::ofstream(file, std::ios::binary | std::ios::trunc) << c.text;
        try {
            (void)load_profile(file, "corrupt");
            o.require(false, c.name + ": silently accepted");
        } catch (const Error& e) {
            o.require(e.code() == c.expected, c.name + ": got " + std::string(error_code_name(e.code())) +
                                                  ", expected " + std::string(error_code_name(c.expected)));
            ++rejected;
        } catch (const std::exception& e) {
            o.require(false, c.name + ": undocumented exception " + e.what());
        }
    }
    if (o.pass) {
        o.detail = std::to_string(round_trips) + " fixture files round-trip, " + std::to_string(rejected) +
                   " corrupted files rejected with the documented error";
    }
    return o;
}

Outcome invariance_suite() {
    Outcome o;
    std::mt19937_64 rng(99);

    // Post permutation leaves every vector unchanged.
    const auto base_set = generate_experiment(default_fixture_spec(), "pizza", "brand_pizza");
    const auto base = build_matrix(base_set);
    for (int t = 0; t < 10; ++t) {
        std::vector<Profile> profiles = base_set.profiles();
        for (auto& p : profiles) std::shuffle(p.posts.begin(), p.posts.end(), rng);
        const auto shuffled = build_matrix(ProfileSet(profiles, base_set.target_index()));
        o.require(shuffled.values == base.values, "post permutation changed a vector");
    }

    // Scale equivariance of match distances. Power-of-two scales are exact, so
    // the ranking must match outright; other scales may reorder exact ties only.
    for (int t = 0; t < 100; ++t) {
        const std::size_t m = 2 + rng() % 25;
        const std::size_t n = 1 + rng() % 30;
        Matrix x(m, n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) x(i, j) = static_cast<double>(rng() % 5);
        }
        const bool dyadic = t % 2 == 0;
        const double c = dyadic ? std::ldexp(1.0, static_cast<int>(rng() % 9) - 4)
                                : std::uniform_real_distribution<double>(0.1, 10.0)(rng);
        Matrix y = x;
        for (std::size_t i = 0; i < m; ++i) {
            for (double& v : y.row(i)) v *= c;
        }
        const std::size_t target = rng() % m;
        const auto a = knn_match(as_doc_term(x), target, m - 1);
        const auto b = knn_match(as_doc_term(y), target, m - 1);
        for (std::size_t r = 0; r < a.neighbors.size(); ++r) {
            o.require(std::fabs(b.neighbors[r].distance - c * a.neighbors[r].distance) <=
                          1e-9 * std::max(1.0, c * a.neighbors[r].distance),
                      "distance not scaled by c");
            if (dyadic) o.require(a.neighbors[r].row == b.neighbors[r].row, "power-of-two scale changed the order");
        }
        for (std::size_t lo = 0; lo < a.neighbors.size();) {
            std::size_t hi = lo + 1;
            while (hi < a.neighbors.size() && a.neighbors[hi].distance == a.neighbors[lo].distance) ++hi;
            std::set<std::size_t> ga, gb;
            for (std::size_t r = lo; r < hi; ++r) {
                ga.insert(a.neighbors[r].row);
                gb.insert(b.neighbors[r].row);
            }
            o.require(ga == gb, "scaling moved a neighbor across distinct distances");
            lo = hi;
        }
    }

    // TF-IDF unit rows.
    {
        PipelineOptions opts;
        opts.weighting = Weighting::kTfidf;
        const auto t = build_matrix(base_set, opts);
        for (std::size_t i = 0; i < t.rows(); ++i) {
            double s = 0.0;
            for (double v : t.values.row(i)) s += v * v;
            o.require(std::fabs(std::sqrt(s) - 1.0) <= 1e-9, "tf-idf row norm off by more than 1e-9");
        }
    }

    // Distance-matrix symmetry and triangle inequality.
    std::size_t triples = 0;
    for (int t = 0; t < 20; ++t) {
        const Matrix x = random_points(rng, 12, 1 + rng() % 20, -3.0, 3.0);
        const Matrix d = pairwise_distances(x);
        for (std::size_t i = 0; i < 12; ++i) {
            o.require(d(i, i) == 0.0, "nonzero diagonal");
            for (std::size_t j = 0; j < 12; ++j) {
                o.require(d(i, j) == d(j, i), "asymmetric distance matrix");
                for (std::size_t k = 0; k < 12; ++k) {
                    o.require(d(i, k) <= d(i, j) + d(j, k) + 1e-12, "triangle inequality");
                    ++triples;
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "post permutation, scale equivariance, unit tf-idf rows, " + std::to_string(triples) +
                   " triangle checks";
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <inflmatch-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_scratch = fs::temp_directory_path() / ("inflmatch_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(g_scratch);
    fs::create_directories(g_scratch);

    struct Criterion {
        const char* id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"AC1", "cluster-assignment reproduction", cluster_assignment},
        {"AC2", "k-NN oracle equivalence", knn_oracle},
        {"AC3", "classical MDS planted recovery", mds_recovery},
        {"AC4", "SMACOF stress monotonicity", smacof_monotone},
        {"AC5", "vectorizer hand-check", vectorizer_hand_check},
        {"AC6", "end-to-end determinism", end_to_end_determinism},
        {"AC7", "schema conformance", schema_conformance},
        {"AC8", "invariance suite", invariance_suite},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << o.detail << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    fs::remove_all(g_scratch);
    return failed == 0 ? 0 : 1;
}
