from koszulkit.cli import main

main()
