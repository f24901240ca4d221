from .cmd import (
    CommandTree, CLI
)
from .out import console
from .settings import get_settings

st = get_settings()


def init():
    """ Initialize environment for application """
    st.APP_DIR = st.APP_DIR.resolve()

    if not st.APP_DIR.is_dir():
        console.log(f"setting up application directory @ {st.APP_DIR}")
        st.APP_DIR.mkdir(exist_ok=True, parents=True)

    if not st.instances_path.is_dir():
        st.instances_path.mkdir(exist_ok=True, parents=True)

    if not st.results_path.is_dir():
        st.results_path.mkdir(exist_ok=True, parents=True)


def main():
    """ Main Function """
    init()
    cli = CLI(
        CommandTree("mxs"),
        description="Solvers and benchmark harness for the MAXSPACE ad-scheduling problems.",
        usage="mxs <command> [<args>]"
    )
    cli.run()


if __name__ == '__main__':
    main()
