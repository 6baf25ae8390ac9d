#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "svlab/commands.hpp"

using namespace svlab;

namespace {

std::string data_path(std::string const & name)
{
    return (std::filesystem::path(SVLAB_TEST_DATA) / name).string();
}

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome run_in_process(cli::Options const & o)
{
    std::ostringstream out, err;
    Outcome r;
    r.code = cli::run(o, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

cli::Options options(std::string command, std::string in = {})
{
    cli::Options o;
    o.command = std::move(command);
    if (!in.empty())
        o.in = data_path(in);
    o.format = "machine";
    return o;
}

Outcome run_binary(std::string const & args)
{
    std::string cmd = std::string(SVLAB_BIN) + " " + args + " 2>/dev/null";
    Outcome r;
    FILE * pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> record_lines(std::string const & text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind("record\t", 0) == 0)
            lines.push_back(line);
    return lines;
}

std::filesystem::path scratch(std::string const & name)
{
    auto dir = std::filesystem::temp_directory_path() / "svlab-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, ExitCodes)
{
    auto ok = run_in_process(options("classify", "case_a_p1xp1.json"));
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(run_in_process(options("classify", "case_d_p5_rejected.json")).code, 2);
    EXPECT_EQ(run_in_process(options("klt", "bad_decimal.json")).code, 2);
    EXPECT_EQ(run_in_process(options("tango", "bad_unknown_key.json")).code, 2);
    EXPECT_EQ(run_in_process(options("tango", "bad_version.json")).code, 2);
    EXPECT_EQ(run_in_process(options("klt", "klt_tangent_pair.json")).code, 0);
    auto missing = options("classify");
    missing.in = data_path("does_not_exist.json");
    EXPECT_EQ(run_in_process(missing).code, 2);
    auto bad_format = options("classify", "case_a_p1xp1.json");
    bad_format.format = "yaml";
    EXPECT_EQ(run_in_process(bad_format).code, 2);
}

TEST(Cli, MachineReport)
{
    auto r = run_in_process(options("klt", "klt_transverse_triple.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("command\tklt\n", 0), 0u);
    EXPECT_NE(r.out.find("19/20"), std::string::npos);
    EXPECT_NE(r.out.find("exit\t0\n"), std::string::npos);
    auto r2 = run_in_process(options("klt", "klt_tangent_pair.json"));
    EXPECT_NE(r2.out.find("-11/10"), std::string::npos);
}

TEST(Cli, TamperedPackageFailsVerification)
{
    auto path = scratch("pkg.json");
    auto c = options("construct");
    c.family = "hyperelliptic";
    c.p = 3;
    c.h = 3;
    c.kind = "kv";
    c.emit = path.string();
    ASSERT_EQ(run_in_process(c).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto pos = text.find("\"1/2\"");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\"1\"");
    in.close();
    std::ofstream(path) << text;
    auto v = options("verify");
    v.in = path.string();
    auto r = run_in_process(v);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("INVALID"), std::string::npos);
}

TEST(Cli, BinaryEmitVerifyRoundTrip)
{
    for (std::string kind : {"kv", "kollar", "semipos"}) {
        auto pkg = scratch("roundtrip-" + kind + ".json");
        auto c = run_binary("construct --family artin-schreier --p 2 --h 5 --kind " + kind +
                            " --format machine --emit " + pkg.string());
        ASSERT_EQ(c.code, 0) << kind;
        auto v = run_binary("verify --in " + pkg.string() + " --format machine");
        ASSERT_EQ(v.code, 0) << kind;
        EXPECT_EQ(record_lines(c.out), record_lines(v.out)) << kind;
        EXPECT_FALSE(record_lines(v.out).empty());
    }
}

TEST(Cli, BinaryExitCodes)
{
    EXPECT_EQ(run_binary("--help").code, 0);
    EXPECT_EQ(run_binary("classify --in " + data_path("case_c_negative_e.json")).code, 0);
    EXPECT_EQ(run_binary("classify --in " + data_path("case_d_p5_rejected.json")).code, 2);
    EXPECT_EQ(run_binary("tango --family hyperelliptic --p 3 --h 4").code, 2);
    EXPECT_EQ(run_binary("tango --family hyperelliptic --p 3 --h 3").code, 0);
    EXPECT_EQ(run_binary("construct --family tango-plane --p 3 --kind kv").code, 2);
    EXPECT_EQ(run_binary("construct --family artin-schreier --p 2 --h 4 --kind semipos").code, 2);
    EXPECT_EQ(run_binary("klt --in " + data_path("klt_tangent_pair.json")).code, 0);
    EXPECT_EQ(run_binary("nosuch").code, 2);
    EXPECT_EQ(run_binary("classify --bogus").code, 2);
}

TEST(Cli, BinaryDeterministic)
{
    for (std::string args : {"classify --in " + data_path("case_c_fiber_degree_2.json") + " --format machine",
                             "sweep --in " + data_path("sweep_g4_e-2_p3.json") + " --format machine",
                             std::string("tango --family artin-schreier --p 3 --h 4 --format machine")}) {
        auto a = run_binary(args), b = run_binary(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
    auto serial = run_binary("sweep --in " + data_path("sweep_g4_e-2_p3.json") + " --format machine --jobs 1");
    auto parallel = run_binary("sweep --in " + data_path("sweep_g4_e-2_p3.json") + " --format machine --jobs 4");
    EXPECT_EQ(record_lines(serial.out), record_lines(parallel.out));
}

TEST(Cli, OutputFile)
{
    auto path = scratch("report.txt");
    std::filesystem::remove(path);
    auto r = run_binary("tango --family hyperelliptic --p 5 --h 3 --format machine --out " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("v_inf=12"), std::string::npos);
}
