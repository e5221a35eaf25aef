#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <permprod/cli.hpp>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, bool with_store_flag = true) {
    args.insert(args.begin(), "permprod");
    if (with_store_flag && args.size() > 1) {
        args.push_back("--no-store");
        args.push_back("--quiet");
    }
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = permprod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(PERMPROD_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, ValueCommands) {
    EXPECT_EQ(invoke({"vmin", "5", "3"}).out, "89\n");
    EXPECT_EQ(invoke({"vmin", "1", "9"}).out, "1\n");
    EXPECT_EQ(invoke({"vmin", "3", "15"}).out, "23328\n");
    EXPECT_EQ(invoke({"vmax", "4", "3"}).out, "100\n");
    EXPECT_EQ(invoke({"count", "5", "3"}).out, "3\n");
    EXPECT_EQ(invoke({"count", "15", "2"}).out, "1\n");
}

TEST(Cli, Minimizers) {
    EXPECT_EQ(invoke({"minimizers", "10", "3", "--workers", "2"}).out,
              "(123456789a, 96485372a1, a783452619)\n");
    const auto all = invoke({"minimizers", "5", "3", "--all"});
    EXPECT_EQ(all.code, 0);
    EXPECT_EQ(all.out,
              "(12345, 34251, 52314)\n"
              "(12345, 35214, 52341)\n"
              "(12345, 35241, 52314)\n");
    EXPECT_EQ(invoke({"minimizers", "3", "1"}).out, "(123)\n");
}

TEST(Cli, OracleCheck) {
    const auto r = invoke({"oracle-check", "3", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "OK v_min=33 n_min=1\n");
}

TEST(Cli, TableCommand) {
    EXPECT_EQ(invoke({"table", "--quantity", "vmin", "--nmax", "3", "--kmax", "3"}).out,
              "n/k,1,2,3\n1,1,1,1\n2,3,4,6\n3,6,10,18\n");
    EXPECT_EQ(invoke({"table", "--quantity", "nmax", "--nmax", "2", "--kmax", "2"}).out, "n/k,1,2\n1,1,1\n2,1,1\n");
    EXPECT_EQ(invoke({"table", "--quantity", "vmin", "--nmax", "5", "--kmax", "4", "--max-nodes", "1000"}).out,
              "n/k,1,2,3,4\n1,1,1,1,1\n2,3,4,6,8\n3,6,10,18,33\n4,10,20,44,96\n5,15,35,89,\n");
}

TEST(Cli, BFileAndVerify) {
    EXPECT_EQ(invoke({"bfile", "--seq", "A070735", "--terms", "5"}).out, "1 1\n2 6\n3 18\n4 44\n5 89\n");
    EXPECT_EQ(invoke({"bfile", "--seq", "A260355", "--terms", "6"}).out, "1 1\n2 1\n3 3\n4 1\n5 4\n6 6\n");
    EXPECT_EQ(invoke({"bfile", "--seq", "A260355", "--terms", "3", "--direction", "n-descending"}).out,
              "1 1\n2 3\n3 1\n");

    const auto ok = invoke({"verify", "--seq", "A070736", "--reference", data_file("b070736.txt"), "--terms", "6"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(ok.out.rfind("OK 6 compared, 6 matched", 0), 0u) << ok.out;

    const auto dir = invoke({"verify", "--seq", "A260355", "--reference", data_file("b260355.txt"), "--terms", "10",
                             "--direction", "n-descending"});
    EXPECT_EQ(dir.code, 1);
    EXPECT_EQ(dir.out.rfind("MISMATCH", 0), 0u) << dir.out;
}

TEST(Cli, StoreReceivesRecords) {
    const auto path = (std::filesystem::temp_directory_path() / ("permprod-cli-" + std::to_string(::getpid()))).string();
    std::filesystem::remove(path);
    const auto r = invoke({"count", "4", "4", "--store", path, "--quiet"}, false);
    EXPECT_EQ(r.out, "4\n");
    const auto store = permprod::load_store(path);
    ASSERT_EQ(store.size(), 1u);
    EXPECT_EQ(store.begin()->second.value, "4");
    EXPECT_EQ(store.begin()->second.lex_min_set, permprod::parse_kset("1234, 2143, 3412, 4321"));
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"vmin", "0", "3"}).code, 2);
    EXPECT_EQ(invoke({"vmin", "16", "3"}).code, 2);
    EXPECT_EQ(invoke({"vmin", "3"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"table", "--quantity", "median", "--nmax", "2", "--kmax", "2"}).code, 2);
    EXPECT_EQ(invoke({"bfile", "--seq", "A260355", "--terms", "3", "--direction", "sideways"}).code, 2);
}

TEST(Cli, ComputationErrorsExitOne) {
    const auto big = invoke({"vmin", "15", "40"});
    EXPECT_EQ(big.code, 1);
    EXPECT_NE(big.err.find("Overflow"), std::string::npos) << big.err;
    EXPECT_EQ(invoke({"oracle-check", "6", "5"}).code, 1);
    EXPECT_EQ(invoke({"bfile", "--seq", "A999999", "--terms", "3"}).code, 1);
    EXPECT_EQ(invoke({"verify", "--seq", "A070735", "--reference", "/nonexistent/b.txt"}).code, 1);
}
