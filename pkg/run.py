import os
import subprocess
import sys


def python_executable(base_dir):
    """Prefer the project's .venv interpreter when present."""
    if os.name == "nt":
        venv_python = os.path.join(base_dir, ".venv", "Scripts", "python.exe")
    else:
        venv_python = os.path.join(base_dir, ".venv", "bin", "python")
    return venv_python if os.path.exists(venv_python) else sys.executable


def run_step(python_exe, cli_script, args):
    print(f"$ securecut {' '.join(args)}")
    return subprocess.run([python_exe, cli_script, *args]).returncode


def run():
    base_dir = os.path.dirname(os.path.abspath(__file__))
    python_exe = python_executable(base_dir)
    cli_script = os.path.join(base_dir, "cli", "main.py")

    # 带参数时直接转发给命令行
    if len(sys.argv) > 1:
        return run_step(python_exe, cli_script, sys.argv[1:])

    print("=" * 40)
    print(">>> SecureCut <<<")
    print("=" * 40)
    print("在 feedback 样例上演示完整流程...")

    network = os.path.join(base_dir, "data", "fixtures", "feedback.json")
    out_dir = os.path.join(base_dir, "data", "out")
    bound_file = os.path.join(out_dir, "feedback.bound.json")
    code_file = os.path.join(out_dir, "feedback.code.json")
    verify_file = os.path.join(out_dir, "feedback.verify.json")
    trace_file = os.path.join(out_dir, "feedback.trace.jsonl")

    steps = [
        ["bound", network, "--out", bound_file],
        ["code", network, "--trials", "1000", "--out", code_file],
        ["verify", network, "--code", code_file, "--out", verify_file],
        ["simulate", network, "--code", code_file, "--T", "100", "--out", trace_file],
    ]
    for args in steps:
        code = run_step(python_exe, cli_script, args)
        if code != 0:
            print(f"步骤失败 (exit {code})")
            return code
    print(f"结果已写入 {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(run())
