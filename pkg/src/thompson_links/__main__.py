from thompson_links.cli import main

main()
